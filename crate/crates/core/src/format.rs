//! Human-readable rendering of linear combinations.

use num_traits::{One, Signed, Zero};

use crate::linalg::{format_rational, Rational};

/// Renders `sum c_i * name_i`, skipping zero terms: `"E12 - 1/2*h"`. An empty
/// name stands for the unit and prints the bare coefficient.
pub fn linear_combination<'a>(terms: impl IntoIterator<Item = (&'a Rational, &'a str)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if name.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    #[test]
    fn renders_signs_and_units() {
        let (a, b, c) = (rat(1), ratio(-1, 2), rat(3));
        assert_eq!(linear_combination([(&a, ""), (&b, "h"), (&c, "a1*b1")]), "1 - 1/2*h + 3*a1*b1");
        let z = rat(0);
        assert_eq!(linear_combination([(&z, "x")]), "0");
        let m = rat(-1);
        assert_eq!(linear_combination([(&m, "E12")]), "-E12");
    }
}
