//! Exact rational scalars used everywhere in the crate.
//!
//! All arithmetic is exact; no floating point appears anywhere. Values
//! serialize as `p/q` in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// The scalar type for chains, cochains, measures, and LP data.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`; intended for literals in code.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q` in lowest terms, `q > 0`, even for integers.
///
/// `BigRational` keeps values reduced with a positive denominator, so this
/// is a plain read of the stored parts.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p`, `-p`, or `p/q` into a reduced rational. Rejects `q == 0`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `|q|` without consuming the argument.
pub fn abs(q: &Rational) -> Rational {
    if q.is_negative() {
        -q.clone()
    } else {
        q.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_in_lowest_terms_with_positive_denominator() {
        assert_eq!(format_rational(&ratio(2, 4)), "1/2");
        assert_eq!(format_rational(&ratio(3, -6)), "-1/2");
        assert_eq!(format_rational(&rat(-7)), "-7/1");
        assert_eq!(format_rational(&rat(0)), "0/1");
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("4").unwrap(), rat(4));
        assert_eq!(parse_rational("-9/12").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("14/-21").unwrap(), ratio(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn roundtrips_through_format() {
        for s in ["5/3", "-5/3", "0/1", "12/1"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
    }
}
