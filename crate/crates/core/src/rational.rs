//! Exact small-denominator rational arithmetic.
//!
//! Threshold values and degree targets live in tiny closed sets
//! ({0, 1/3, 1/2} and {2/3, 5/7, 3/4, 7/9, 4/5}), and degree audits must be
//! exact, so a reduced i64 fraction is all that is needed.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational { num: sign * num / g, den: sign * den / g }
    }

    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Largest integer ≤ self.
    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    /// Smallest integer ≥ self.
    pub fn ceil(&self) -> i64 {
        -((-self.num).div_euclid(self.den))
    }

    /// Parses either `a/b` or a plain decimal like `0.05` into an exact value.
    pub fn parse(s: &str) -> Option<Rational> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num: i64 = a.trim().parse().ok()?;
            let den: i64 = b.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            return Some(Rational::new(num, den));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || frac_part.len() > 12 {
                return None;
            }
            let negative = int_part.trim_start().starts_with('-');
            let int: i64 = if int_part == "-" { 0 } else { int_part.parse().ok()? };
            let frac: i64 = frac_part.parse().ok()?;
            let scale = 10i64.checked_pow(frac_part.len() as u32)?;
            let mag = int.abs().checked_mul(scale)?.checked_add(frac)?;
            let signed = if negative { -mag } else { mag };
            return Some(Rational::new(signed, scale));
        }
        let num: i64 = s.parse().ok()?;
        Some(Rational::new(num, 1))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators stay tiny here; i64 cross-multiplication cannot overflow.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl std::ops::Mul<i64> for Rational {
    type Output = Rational;
    fn mul(self, rhs: i64) -> Rational {
        Rational::new(self.num * rhs, self.den)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::new(v, 1)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
