//! Simple cBCK-chains under truncated subtraction `x·y = max(x − y, 0)`.
//!
//! Three kinds are provided: the finite chain `{0, …, h}`, the naturals and
//! the exact non-negative rationals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{CayleyTable, FiniteCbck};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainSpec {
    /// `{0, 1, …, h}` with `h ≥ 1`.
    Finite(u32),
    Naturals,
    NonnegRationals,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChainValue {
    Level(u32),
    Natural(u64),
    Rational(BigRational),
}

impl ChainValue {
    /// Exact rational `numer/denom`. Panics on a zero denominator.
    pub fn rational(numer: u64, denom: u64) -> ChainValue {
        ChainValue::Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ChainValue::Level(v) => *v == 0,
            ChainValue::Natural(v) => *v == 0,
            ChainValue::Rational(q) => q.is_zero(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            ChainValue::Level(_) => "level",
            ChainValue::Natural(_) => "natural",
            ChainValue::Rational(_) => "rational",
        }
    }
}

impl fmt::Display for ChainValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainValue::Level(v) => write!(f, "{v}"),
            ChainValue::Natural(v) => write!(f, "{v}"),
            ChainValue::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ChainValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainSpec::Finite(h) => write!(f, "T{h}"),
            ChainSpec::Naturals => f.write_str("N"),
            ChainSpec::NonnegRationals => f.write_str("Q+"),
        }
    }
}

impl FromStr for ChainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" => Ok(ChainSpec::Naturals),
            "Q+" => Ok(ChainSpec::NonnegRationals),
            _ => {
                let h = s
                    .strip_prefix('T')
                    .and_then(|h| h.parse::<u32>().ok())
                    .filter(|&h| h >= 1)
                    .ok_or_else(|| {
                        Error::Parse(format!("unknown chain `{s}` (expected Th, N or Q+)"))
                    })?;
                Ok(ChainSpec::Finite(h))
            }
        }
    }
}

impl ChainSpec {
    pub fn zero(&self) -> ChainValue {
        match self {
            ChainSpec::Finite(_) => ChainValue::Level(0),
            ChainSpec::Naturals => ChainValue::Natural(0),
            ChainSpec::NonnegRationals => ChainValue::Rational(BigRational::zero()),
        }
    }

    /// The element `1`, a fixed non-zero value present in every kind.
    pub fn unit(&self) -> ChainValue {
        match self {
            ChainSpec::Finite(_) => ChainValue::Level(1),
            ChainSpec::Naturals => ChainValue::Natural(1),
            ChainSpec::NonnegRationals => ChainValue::rational(1, 1),
        }
    }

    pub fn conforms(&self, value: &ChainValue) -> bool {
        match (self, value) {
            (ChainSpec::Finite(h), ChainValue::Level(v)) => v <= h,
            (ChainSpec::Naturals, ChainValue::Natural(_)) => true,
            (ChainSpec::NonnegRationals, ChainValue::Rational(q)) => !q.is_negative(),
            _ => false,
        }
    }

    pub fn check(&self, value: &ChainValue) -> Result<()> {
        if self.conforms(value) {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                spec: self.to_string(),
                value: format!("{} {value}", value.kind()),
            })
        }
    }

    /// Parses a literal such as `"3"` or `"7/2"` as an element of this chain.
    pub fn parse_value(&self, literal: &str) -> Result<ChainValue> {
        let bad = || Error::Parse(format!("`{literal}` is not an element of {self}"));
        let value = match self {
            ChainSpec::Finite(_) => ChainValue::Level(literal.trim().parse().map_err(|_| bad())?),
            ChainSpec::Naturals => ChainValue::Natural(literal.trim().parse().map_err(|_| bad())?),
            ChainSpec::NonnegRationals => {
                let (numer, denom) = match literal.trim().split_once('/') {
                    Some((p, q)) => (p.trim(), q.trim()),
                    None => (literal.trim(), "1"),
                };
                let numer: BigUint = numer.parse().map_err(|_| bad())?;
                let denom: BigUint = denom.parse().map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(bad());
                }
                ChainValue::Rational(BigRational::new(numer.into(), denom.into()))
            }
        };
        self.check(&value).map_err(|_| bad())?;
        Ok(value)
    }

    /// Compares two elements of this chain.
    pub fn compare(&self, x: &ChainValue, y: &ChainValue) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        Ok(match (x, y) {
            (ChainValue::Level(a), ChainValue::Level(b)) => a.cmp(b),
            (ChainValue::Natural(a), ChainValue::Natural(b)) => a.cmp(b),
            (ChainValue::Rational(a), ChainValue::Rational(b)) => a.cmp(b),
            _ => unreachable!("checked against the same spec"),
        })
    }
}

/// Truncated difference `max(x − y, 0)`.
pub fn chain_diff(spec: &ChainSpec, x: &ChainValue, y: &ChainValue) -> Result<ChainValue> {
    chain_pow_diff(spec, x, y, 1)
}

/// `x·yⁿ`, the truncated difference `max(x − n·y, 0)` computed in closed form.
pub fn chain_pow_diff(
    spec: &ChainSpec,
    x: &ChainValue,
    y: &ChainValue,
    n: u64,
) -> Result<ChainValue> {
    spec.check(x)?;
    spec.check(y)?;
    Ok(match (x, y) {
        (ChainValue::Level(a), ChainValue::Level(b)) => {
            let a = u64::from(*a);
            ChainValue::Level(a.saturating_sub(u64::from(*b).saturating_mul(n)) as u32)
        }
        (ChainValue::Natural(a), ChainValue::Natural(b)) => {
            ChainValue::Natural(a.saturating_sub(b.saturating_mul(n)))
        }
        (ChainValue::Rational(a), ChainValue::Rational(b)) => {
            let rest = a - b * BigRational::from_integer(BigInt::from(n));
            ChainValue::Rational(if rest.is_positive() {
                rest
            } else {
                BigRational::zero()
            })
        }
        _ => unreachable!("checked against the same spec"),
    })
}

/// Least `n` with `x·yⁿ = 0`, or `None` when `y = 0` and `x ≠ 0`.
pub fn annihilator_exponent(
    spec: &ChainSpec,
    x: &ChainValue,
    y: &ChainValue,
) -> Result<Option<u64>> {
    spec.check(x)?;
    spec.check(y)?;
    if x.is_zero() {
        return Ok(Some(0));
    }
    if y.is_zero() {
        return Ok(None);
    }
    let n = match (x, y) {
        (ChainValue::Level(a), ChainValue::Level(b)) => u64::from(u32::div_ceil(*a, *b)),
        (ChainValue::Natural(a), ChainValue::Natural(b)) => u64::div_ceil(*a, *b),
        (ChainValue::Rational(a), ChainValue::Rational(b)) => (a / b)
            .ceil()
            .to_integer()
            .to_u64()
            .ok_or(Error::ExponentOverflow)?,
        _ => unreachable!("checked against the same spec"),
    };
    Ok(Some(n))
}

/// The `(h+1)`-element chain `{0, …, h}` as an operation table.
pub fn chain_as_finite_algebra(h: u32) -> FiniteCbck {
    assert!(h >= 1, "chain height must be positive");
    let size = h as usize + 1;
    let table =
        CayleyTable::from_fn(size, 0, |x, y| x.saturating_sub(y)).expect("chain table in range");
    FiniteCbck::new(table).expect("truncated subtraction is a cBCK operation")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> ChainValue {
        ChainValue::Natural(v)
    }

    #[test]
    fn truncated_difference_examples() {
        let n = ChainSpec::Naturals;
        assert_eq!(chain_diff(&n, &nat(5), &nat(2)).unwrap(), nat(3));
        assert_eq!(chain_diff(&n, &nat(2), &nat(5)).unwrap(), nat(0));
        let q = ChainSpec::NonnegRationals;
        let r = chain_diff(&q, &ChainValue::rational(7, 2), &ChainValue::rational(1, 3)).unwrap();
        assert_eq!(r, ChainValue::rational(19, 6));
        assert_eq!(r.to_string(), "19/6");
    }

    #[test]
    fn mismatched_kinds_are_rejected() {
        let n = ChainSpec::Naturals;
        assert!(matches!(
            chain_diff(&n, &nat(1), &ChainValue::rational(1, 2)),
            Err(Error::SpecMismatch { .. })
        ));
        assert!(chain_diff(
            &ChainSpec::Finite(2),
            &ChainValue::Level(3),
            &ChainValue::Level(0)
        )
        .is_err());
        assert!(annihilator_exponent(&n, &ChainValue::Level(1), &nat(1)).is_err());
    }

    #[test]
    fn exponent_examples() {
        let n = ChainSpec::Naturals;
        assert_eq!(annihilator_exponent(&n, &nat(5), &nat(2)).unwrap(), Some(3));
        assert_eq!(annihilator_exponent(&n, &nat(0), &nat(7)).unwrap(), Some(0));
        assert_eq!(annihilator_exponent(&n, &nat(0), &nat(0)).unwrap(), Some(0));
        assert_eq!(annihilator_exponent(&n, &nat(3), &nat(0)).unwrap(), None);
        let q = ChainSpec::NonnegRationals;
        assert_eq!(
            annihilator_exponent(&q, &ChainValue::rational(7, 2), &ChainValue::rational(1, 3))
                .unwrap(),
            Some(11)
        );
        assert_eq!(
            annihilator_exponent(
                &ChainSpec::Finite(4),
                &ChainValue::Level(4),
                &ChainValue::Level(2)
            )
            .unwrap(),
            Some(2)
        );
    }

    #[test]
    fn finite_chain_tables() {
        let c2 = chain_as_finite_algebra(1);
        assert_eq!(c2.table().rows(), vec![vec![0, 0], vec![1, 0]]);
        let c3 = chain_as_finite_algebra(2);
        assert_eq!(c3.op(2, 1), 1);
        let c4 = chain_as_finite_algebra(3);
        assert!(crate::algebra::verify_axioms(c4.table()).valid);
        assert!(c4.is_chain());
    }

    #[test]
    fn spec_and_literal_parsing() {
        assert_eq!("T3".parse::<ChainSpec>().unwrap(), ChainSpec::Finite(3));
        assert_eq!("N".parse::<ChainSpec>().unwrap(), ChainSpec::Naturals);
        assert_eq!(
            "Q+".parse::<ChainSpec>().unwrap(),
            ChainSpec::NonnegRationals
        );
        assert!("T0".parse::<ChainSpec>().is_err());
        assert!("R".parse::<ChainSpec>().is_err());
        let q = ChainSpec::NonnegRationals;
        assert_eq!(q.parse_value("4/2").unwrap(), ChainValue::rational(2, 1));
        assert_eq!(q.parse_value("4/2").unwrap().to_string(), "2");
        assert!(q.parse_value("1/0").is_err());
        assert!(q.parse_value("-1/2").is_err());
        assert!(ChainSpec::Finite(2).parse_value("3").is_err());
        assert_eq!(
            ChainSpec::Finite(2).parse_value("2").unwrap(),
            ChainValue::Level(2)
        );
    }
}
