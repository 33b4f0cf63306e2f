//! Shared text formatting for linear combinations.

/// True when `s` has a `+` or `-` outside parentheses, ignoring a leading
/// sign and signs that follow `^`.
fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    let mut prev = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 && prev != Some('^') => return true,
            _ => {}
        }
        prev = Some(ch);
    }
    false
}

/// Renders `Σ coeff·basis`, writing `1` for an empty basis label.
///
/// `sep` goes between a coefficient and its basis label.
pub(crate) fn linear_combination<'a, I>(terms: I, sep: &str) -> String
where
    I: IntoIterator<Item = (String, &'a str)>,
{
    let mut out = String::new();
    for (coeff, basis) in terms {
        let (negative, body) = term(&coeff, basis, sep);
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term(coeff: &str, basis: &str, sep: &str) -> (bool, String) {
    let compound = has_top_level_sum(coeff);
    let (negative, magnitude) = match coeff.strip_prefix('-') {
        Some(rest) if !compound => (true, rest),
        _ => (false, coeff),
    };
    if basis.is_empty() {
        return (negative, magnitude.to_string());
    }
    if magnitude == "1" {
        return (negative, basis.to_string());
    }
    if compound {
        (false, format!("({}){}{}", coeff, sep, basis))
    } else {
        (negative, format!("{}{}{}", magnitude, sep, basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_signs_and_parentheses() {
        let terms = vec![
            ("-1".to_string(), "v2*vm2"),
            ("(c+q^2*c)/q^2".to_string(), ""),
        ];
        assert_eq!(linear_combination(terms, "*"), "-v2*vm2 + (c+q^2*c)/q^2");
        let terms = vec![("1-q".to_string(), "E"), ("-2/q".to_string(), "F")];
        assert_eq!(linear_combination(terms, " "), "(1-q) E - 2/q F");
        assert_eq!(linear_combination(Vec::<(String, &str)>::new(), "*"), "0");
        assert_eq!(linear_combination(vec![("q^-1".to_string(), "K")], " "), "q^-1 K");
    }
}
