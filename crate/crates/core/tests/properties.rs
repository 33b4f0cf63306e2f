use std::sync::OnceLock;

use num_rational::BigRational;
use proptest::prelude::*;
use qcartan::algebra::{ClElement, ExtElement, DIM};
use qcartan::braiding::sigma_tilde;
use qcartan::expr::parse;
use qcartan::qcl::ClAlgebra;
use qcartan::qext::ExtAlgebra;
use qcartan::repn::ModuleSpec;
use qcartan::scalar::{Field, Params, Scalar};

type Q = BigRational;

fn point() -> Params<Q> {
    Params::at(Q::new(7.into(), 5.into()), Q::new(3.into(), 2.into())).unwrap()
}

fn cl() -> &'static ClAlgebra<Q> {
    static CL: OnceLock<ClAlgebra<Q>> = OnceLock::new();
    CL.get_or_init(|| ClAlgebra::new(point()).unwrap())
}

fn ext() -> &'static ExtAlgebra<Q> {
    static EXT: OnceLock<ExtAlgebra<Q>> = OnceLock::new();
    EXT.get_or_init(|| ExtAlgebra::new(point()).unwrap())
}

fn symbolic_cl() -> &'static ClAlgebra<Scalar> {
    static CL: OnceLock<ClAlgebra<Scalar>> = OnceLock::new();
    CL.get_or_init(|| ClAlgebra::new(Params::symbolic()).unwrap())
}

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn coeffs() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(rational(), DIM)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    let monomial = (-3i64..=3, 0u32..=3, 0u32..=1).prop_map(|(k, a, b)| format!("{k}*q^{a}*c^{b}"));
    let poly = prop::collection::vec(monomial, 1..3).prop_map(|terms| terms.join(" + "));
    (poly.clone(), poly).prop_filter_map("nonzero denominator", |(n, d)| {
        let den: Scalar = d.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        n.parse::<Scalar>().ok()?.div(&den).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one());
        }
    }

    #[test]
    fn scalar_rendering_round_trips(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn clifford_multiplication_is_associative(a in coeffs(), b in coeffs(), c in coeffs()) {
        let cl = cl();
        let (a, b, c) = (ClElement::from_coeffs(a), ClElement::from_coeffs(b), ClElement::from_coeffs(c));
        prop_assert_eq!(cl.mul(&cl.mul(&a, &b), &c), cl.mul(&a, &cl.mul(&b, &c)));
    }

    #[test]
    fn differentials_square_to_zero(a in coeffs()) {
        let x = ClElement::from_coeffs(a.clone());
        prop_assert!(cl().d_cl(&cl().d_cl(&x)).is_zero());
        let y = ExtElement::from_coeffs(a);
        prop_assert!(ext().d_ext(&ext().d_ext(&y)).is_zero());
    }

    #[test]
    fn d_ext_is_a_graded_derivation(a in coeffs(), b in coeffs()) {
        let ext = ext();
        let (a, b) = (ExtElement::from_coeffs(a), ExtElement::from_coeffs(b));
        let (a0, a1) = (a.parity_part(0), a.parity_part(1));
        let lhs = ext.d_ext(&ext.mul(&a, &b));
        let rhs = ext.mul(&ext.d_ext(&a), &b)
            .add(&ext.mul(&a0, &ext.d_ext(&b)))
            .sub(&ext.mul(&a1, &ext.d_ext(&b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cartan_formula_on_elements(a in coeffs(), letter in 0u8..3) {
        let cl = cl();
        let x = ClElement::from_coeffs(a);
        let iota = cl.contraction_matrix(letter).unwrap();
        let homotopy = cl.apply(&iota, &cl.d_cl(&x)).add(&cl.d_cl(&cl.apply(&iota, &x)));
        prop_assert_eq!(cl.apply(&cl.lie_derivative_of_letter(letter), &x), homotopy);
    }

    #[test]
    fn normalized_tilde_braiding_is_involutive(v in prop::collection::vec(rational(), 9)) {
        let p = point();
        let m = ModuleSpec::v2pi(&p).unwrap();
        let st = sigma_tilde(&m, &m, &p).unwrap();
        prop_assert_eq!(st.apply(&st.apply(&v)), v);
    }

    #[test]
    fn parse_render_round_trip(a in coeffs()) {
        let x = ClElement::from_coeffs(a);
        let back = cl().eval(&parse(&x.to_string()).unwrap(), None).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn gamma_is_invariant_at_random_points(q in rational(), c in rational()) {
        prop_assume!(q != Q::from_integer(0.into()) && q != Q::from_integer(1.into()) && q != Q::from_integer((-1).into()));
        prop_assume!(c != Q::from_integer(0.into()));
        let at = |s: &Scalar| s.specialize(&q, &c);
        let cl = symbolic_cl();
        let g = cl.gamma();
        let g2 = cl.mul(&g, &g).try_map(at).unwrap();
        let expected = Q::from_integer(1.into()).add(&q.mul(&q)).div(&Q::from_integer(4.into()).mul(&c).mul(&q)).unwrap();
        prop_assert_eq!(g2, ClElement::scalar(expected));
    }
}
