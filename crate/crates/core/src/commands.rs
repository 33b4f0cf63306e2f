//! The operations behind the `qcartan` command line: normalisation of
//! expressions, named matrices, and cohomology summaries.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{degree, parity, Algebra, AlgebraError, AlgebraKind, Element, DIM};
use crate::braiding::{sigma, sigma_inv, sigma_tilde, BraidingError};
use crate::cohomology::{cohomology, CohomologyError, Grading};
use crate::expr::{parse, ParseError};
use crate::linalg::Matrix;
use crate::qcl::{ClAlgebra, QclError};
use crate::qext::ExtAlgebra;
use crate::repn::{ModuleSpec, ReprError};
use crate::scalar::{Field, Params, Scalar, ScalarError};
use crate::uq::{Generator, SlqElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    #[error("syntax error: {0}")]
    Syntax(#[from] ParseError),
    #[error("unknown object `{0}`; expected sigma, sigma-inv, sigma-tilde, d-ext, d-cl, iota(x) or L(g)")]
    UnknownObject(String),
    #[error("unknown space `{0}`; expected V2pi, ext or cl")]
    UnknownSpace(String),
    #[error("`{object}` needs {expected}")]
    Arity { object: String, expected: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Qcl(#[from] QclError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraName {
    Ext,
    Cl,
}

impl FromStr for AlgebraName {
    type Err = CommandError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ext" => Ok(AlgebraName::Ext),
            "cl" => Ok(AlgebraName::Cl),
            other => Err(CommandError::UnknownSpace(other.to_string())),
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraName::Ext => "ext",
            AlgebraName::Cl => "cl",
        })
    }
}

/// A module a matrix can act on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    V2pi,
    Ext,
    Cl,
}

impl FromStr for Space {
    type Err = CommandError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "V2pi" | "v2pi" | "V" => Ok(Space::V2pi),
            "ext" => Ok(Space::Ext),
            "cl" => Ok(Space::Cl),
            other => Err(CommandError::UnknownSpace(other.to_string())),
        }
    }
}

/// An element of `sl_q(2)` or a generator of `U_q(sl2)`, as accepted by `L(..)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieArgument {
    Generator(Generator),
    Letter(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixObject {
    Sigma,
    SigmaInv,
    SigmaTilde,
    DExt,
    DCl,
    Iota(u8),
    Lie(LieArgument),
}

fn letter(name: &str) -> Option<u8> {
    match name {
        "v2" | "X" => Some(0),
        "v0" | "Z" => Some(1),
        "vm2" | "Y" => Some(2),
        _ => None,
    }
}

impl FromStr for MatrixObject {
    type Err = CommandError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CommandError::UnknownObject(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let argument = |prefix: &str| {
            compact
                .strip_prefix(prefix)
                .and_then(|rest| rest.strip_prefix('('))
                .and_then(|rest| rest.strip_suffix(')'))
        };
        Ok(match compact.as_str() {
            "sigma" => MatrixObject::Sigma,
            "sigma-inv" => MatrixObject::SigmaInv,
            "sigma-tilde" => MatrixObject::SigmaTilde,
            "d-ext" => MatrixObject::DExt,
            "d-cl" => MatrixObject::DCl,
            _ => {
                if let Some(x) = argument("iota") {
                    MatrixObject::Iota(letter(x).ok_or_else(unknown)?)
                } else if let Some(g) = argument("L") {
                    let arg = match g {
                        "E" => LieArgument::Generator(Generator::E),
                        "F" => LieArgument::Generator(Generator::F),
                        "K" => LieArgument::Generator(Generator::K),
                        "K^-1" | "Kinv" => LieArgument::Generator(Generator::KInv),
                        other => LieArgument::Letter(letter(other).ok_or_else(unknown)?),
                    };
                    MatrixObject::Lie(arg)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// Everything needed to answer commands at one set of parameters.
pub struct Workspace<F: Field> {
    pub params: Params<F>,
    pub ext: ExtAlgebra<F>,
    pub cl: ClAlgebra<F>,
}

impl<F: Field> Workspace<F> {
    pub fn new(params: Params<F>) -> Result<Self, CommandError> {
        Ok(Workspace {
            ext: ExtAlgebra::new(params.clone())?,
            cl: ClAlgebra::new(params.clone())?,
            params,
        })
    }

    /// Evaluates `text` in the chosen algebra and renders it on the canonical basis.
    pub fn normalize(&self, algebra: AlgebraName, text: &str) -> Result<String, CommandError> {
        let expr = parse(text)?;
        Ok(match algebra {
            AlgebraName::Ext => self.ext.eval(&expr, None)?.to_string(),
            AlgebraName::Cl => self.cl.eval(&expr, Some(&self.cl.gamma()))?.to_string(),
        })
    }

    fn module(&self, space: Space) -> Result<ModuleSpec<F>, CommandError> {
        Ok(match space {
            Space::V2pi => ModuleSpec::v2pi(&self.params)?,
            Space::Ext => self.ext.module().clone(),
            Space::Cl => self.cl.module().clone(),
        })
    }

    /// The matrix of `object`. Braidings take two spaces (default `V2pi V2pi`),
    /// `iota` and `L` take one (default `cl`), differentials take none.
    pub fn matrix(&self, object: MatrixObject, spaces: &[Space]) -> Result<Matrix<F>, CommandError> {
        let arity = |expected: &'static str| CommandError::Arity {
            object: format!("{object:?}"),
            expected,
        };
        let p = &self.params;
        match object {
            MatrixObject::Sigma | MatrixObject::SigmaInv | MatrixObject::SigmaTilde => {
                let (m, n) = match spaces {
                    [] => (Space::V2pi, Space::V2pi),
                    [m, n] => (*m, *n),
                    _ => return Err(arity("two spaces")),
                };
                let (m, n) = (self.module(m)?, self.module(n)?);
                let op = match object {
                    MatrixObject::Sigma => sigma(&m, &n, p)?,
                    MatrixObject::SigmaInv => sigma_inv(&m, &n, p)?,
                    _ => sigma_tilde(&m, &n, p)?,
                };
                Ok(op.matrix)
            }
            MatrixObject::DExt | MatrixObject::DCl => {
                if !spaces.is_empty() {
                    return Err(arity("no space"));
                }
                Ok(match object {
                    MatrixObject::DExt => self.ext.d_ext_matrix(),
                    _ => self.cl.d_cl_matrix(),
                })
            }
            MatrixObject::Iota(x) => match spaces {
                [] | [Space::Cl] => Ok(self.cl.contraction_matrix(x)?),
                [Space::Ext] => Ok(self.ext.contraction_matrix(x)),
                _ => Err(arity("the space ext or cl")),
            },
            MatrixObject::Lie(arg) => {
                let space = match spaces {
                    [] => Space::Cl,
                    [s] => *s,
                    _ => return Err(arity("one space")),
                };
                let module = self.module(space)?;
                Ok(match arg {
                    LieArgument::Generator(g) => module.action(g).clone(),
                    LieArgument::Letter(l) => {
                        let x = SlqElement::<F>::basis()[l as usize].to_uq(p);
                        module.action_of(&x)
                    }
                })
            }
        }
    }
}

/// Dimensions and representatives of the cohomology of `d_∧` or `d_Cl`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologySummary {
    pub algebra: AlgebraName,
    pub betti: Vec<usize>,
    pub cycles: usize,
    pub boundaries: usize,
    pub representatives: Vec<String>,
}

impl fmt::Display for CohomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grading = match self.algebra {
            AlgebraName::Ext => "degree",
            AlgebraName::Cl => "parity",
        };
        writeln!(f, "betti numbers by {grading}: {:?}", self.betti)?;
        writeln!(f, "dim ker = {}, dim im = {}", self.cycles, self.boundaries)?;
        if self.representatives.is_empty() {
            write!(f, "acyclic")
        } else {
            write!(f, "representatives: {}", self.representatives.join(", "))
        }
    }
}

fn summarize<F: Field, K: AlgebraKind>(
    algebra: AlgebraName,
    d: &Matrix<F>,
) -> Result<CohomologySummary, CommandError> {
    let grading = match algebra {
        AlgebraName::Ext => Grading::Integer((0..DIM).map(degree).collect()),
        AlgebraName::Cl => Grading::Parity((0..DIM).map(parity).collect()),
    };
    let report = cohomology(d, &grading)?;
    Ok(CohomologySummary {
        algebra,
        betti: report.betti_numbers(),
        cycles: report.total_cycles(),
        boundaries: report.total_boundaries(),
        representatives: report
            .degrees
            .iter()
            .flat_map(|deg| deg.representatives.iter())
            .map(|r| Element::<F, K>::from_coeffs(r.clone()).to_string())
            .collect(),
    })
}

fn differential<F: Field>(ws: &Workspace<F>, algebra: AlgebraName) -> Matrix<F> {
    match algebra {
        AlgebraName::Ext => ws.ext.d_ext_matrix(),
        AlgebraName::Cl => ws.cl.d_cl_matrix(),
    }
}

fn summarize_for<F: Field>(algebra: AlgebraName, d: &Matrix<F>) -> Result<CohomologySummary, CommandError> {
    match algebra {
        AlgebraName::Ext => summarize::<F, <ExtAlgebra<F> as HasKind>::Kind>(algebra, d),
        AlgebraName::Cl => summarize::<F, <ClAlgebra<F> as HasKind>::Kind>(algebra, d),
    }
}

trait HasKind {
    type Kind: AlgebraKind;
}

impl<F: Field, K: AlgebraKind> HasKind for Algebra<F, K> {
    type Kind = K;
}

/// Cohomology over `Q(u, c)`, or at a point when one is given. Points are
/// reached by specialising the symbolic differential, so `q = 1` is allowed.
pub fn cohomology_summary(
    algebra: AlgebraName,
    point: Option<(&BigRational, &BigRational)>,
) -> Result<CohomologySummary, CommandError> {
    let ws = Workspace::<Scalar>::new(Params::symbolic())?;
    let d = differential(&ws, algebra);
    match point {
        None => summarize_for(algebra, &d),
        Some((q, c)) => {
            let d = d.try_map(|s| s.specialize(q, c))?;
            summarize_for(algebra, &d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symbolic() -> Workspace<Scalar> {
        Workspace::new(Params::symbolic()).unwrap()
    }

    #[test]
    fn normalizes_relations() {
        let ws = symbolic();
        assert_eq!(ws.normalize(AlgebraName::Cl, "vm2*v2").unwrap(), "-v2*vm2 + (q^2+1)/q^2 * c");
        assert_eq!(ws.normalize(AlgebraName::Cl, "1").unwrap(), "1");
        assert!(ws.normalize(AlgebraName::Ext, "v0*v0").unwrap().contains("v2*vm2"));
        assert!(matches!(ws.normalize(AlgebraName::Cl, "v2**"), Err(CommandError::Syntax(_))));
    }

    #[test]
    fn parses_objects() {
        assert_eq!("iota(v0)".parse::<MatrixObject>().unwrap(), MatrixObject::Iota(1));
        assert_eq!(
            "L(K)".parse::<MatrixObject>().unwrap(),
            MatrixObject::Lie(LieArgument::Generator(Generator::K))
        );
        assert!(matches!("tau".parse::<MatrixObject>(), Err(CommandError::UnknownObject(_))));
        assert!(matches!("iota(w)".parse::<MatrixObject>(), Err(CommandError::UnknownObject(_))));
    }

    #[test]
    fn named_matrices() {
        let ws = symbolic();
        let st = ws.matrix(MatrixObject::SigmaTilde, &[]).unwrap();
        assert_eq!(st.rows(), 9);
        let d = ws.matrix(MatrixObject::DCl, &[]).unwrap();
        let dv2 = ws.cl.eval(&parse("-1/c*v2*v0").unwrap(), None).unwrap();
        assert_eq!(d.column(1), dv2.coeffs());
        let k = ws.matrix(MatrixObject::Lie(LieArgument::Generator(Generator::K)), &[Space::Cl]).unwrap();
        assert!((0..8).all(|i| (0..8).all(|j| i == j || k.get(i, j).is_zero())));
    }

    #[test]
    fn cohomology_at_q_one() {
        let one = BigRational::from_integer(1.into());
        let s = cohomology_summary(AlgebraName::Ext, Some((&one, &one))).unwrap();
        assert_eq!(s.betti, vec![1, 0, 0, 1]);
        let s = cohomology_summary(AlgebraName::Cl, None).unwrap();
        assert_eq!((s.cycles, s.boundaries), (4, 4));
    }
}
