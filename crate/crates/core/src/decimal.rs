//! Decimal literals to exact integers.
//!
//! Both arrays are multiplied by one common power of ten, so every ratio of
//! sums keeps its value and the scaled sums can be printed back as exact
//! decimals with [`format_scaled`].

use std::str::FromStr;

use bigdecimal::BigDecimal;
use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::model::ExactInstance;

/// An exact instance whose elements are the original decimals times `10^scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedInstance {
    pub instance: ExactInstance,
    pub scale: u32,
}

impl NormalizedInstance {
    /// Prints a scaled integer (such as a ratio numerator) in input units.
    pub fn unscale(&self, value: &BigInt) -> String {
        format_scaled(value, self.scale)
    }
}

pub fn parse_decimal(literal: &str) -> Result<BigDecimal> {
    let trimmed = literal.trim();
    BigDecimal::from_str(trimmed).map_err(|_| Error::InvalidDecimal {
        literal: literal.to_string(),
    })
}

/// Scales both arrays by the smallest power of ten that makes every element integral.
pub fn normalize(a: &[BigDecimal], b: &[BigDecimal]) -> Result<NormalizedInstance> {
    let scale = a
        .iter()
        .chain(b)
        .map(|d| d.as_bigint_and_exponent().1)
        .max()
        .unwrap_or(0)
        .max(0);
    let scale = u32::try_from(scale).map_err(|_| Error::InvalidDecimal {
        literal: format!("value with 10^-{scale} precision"),
    })?;
    let to_int = |d: &BigDecimal| -> BigInt {
        let (digits, exp) = d.as_bigint_and_exponent();
        let shift = i64::from(scale) - exp;
        // A negative exponent in the literal (e.g. 3e2) makes `shift` exceed `scale`.
        digits * BigInt::from(10u32).pow(shift as u32)
    };
    let instance = ExactInstance::new(a.iter().map(to_int).collect(), b.iter().map(to_int).collect())?;
    Ok(NormalizedInstance { instance, scale })
}

pub fn from_decimal_strs<S: AsRef<str>>(a: &[S], b: &[S]) -> Result<NormalizedInstance> {
    let parse_all =
        |xs: &[S]| -> Result<Vec<BigDecimal>> { xs.iter().map(|s| parse_decimal(s.as_ref())).collect() };
    normalize(&parse_all(a)?, &parse_all(b)?)
}

/// Renders `value / 10^scale` as a plain decimal without trailing zeros.
pub fn format_scaled(value: &BigInt, scale: u32) -> String {
    let digits = value.abs().to_string();
    let sign = if value.is_negative() { "-" } else { "" };
    if scale == 0 {
        return format!("{sign}{digits}");
    }
    let scale = scale as usize;
    let padded = if digits.len() <= scale {
        format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - scale);
    let frac_part = frac_part.trim_end_matches('0');
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Array;

    #[test]
    fn integers_keep_scale_zero() {
        let n = from_decimal_strs(&["3", "2", "5", "7"], &["6", "2", "2", "8"]).unwrap();
        assert_eq!(n.scale, 0);
        assert_eq!(
            n.instance,
            ExactInstance::from_u64(&[3, 2, 5, 7], &[6, 2, 2, 8]).unwrap()
        );
    }

    #[test]
    fn common_power_of_ten() {
        let n = from_decimal_strs(&["0.5", "1.25"], &["2", "1e1"]).unwrap();
        assert_eq!(n.scale, 2);
        assert_eq!(
            n.instance,
            ExactInstance::from_u64(&[50, 125], &[200, 1000]).unwrap()
        );
        assert_eq!(n.unscale(&BigInt::from(175)), "1.75");
    }

    #[test]
    fn exponent_literals() {
        let n = from_decimal_strs(&["3e2", "1"], &["2.5E-1", "1"]).unwrap();
        assert_eq!(n.scale, 2);
        assert_eq!(
            n.instance,
            ExactInstance::from_u64(&[30000, 100], &[25, 100]).unwrap()
        );
    }

    #[test]
    fn rejects_garbage_and_nonpositive() {
        assert!(matches!(
            from_decimal_strs(&["x", "1"], &["1", "1"]),
            Err(Error::InvalidDecimal { .. })
        ));
        assert_eq!(
            from_decimal_strs(&["1", "-0.5"], &["1", "1"]),
            Err(Error::NonPositiveElement {
                array: Array::A,
                index: 2
            })
        );
    }

    #[test]
    fn formats_scaled_values() {
        assert_eq!(format_scaled(&BigInt::from(5), 0), "5");
        assert_eq!(format_scaled(&BigInt::from(5), 3), "0.005");
        assert_eq!(format_scaled(&BigInt::from(1200), 2), "12");
        assert_eq!(format_scaled(&BigInt::from(-1205), 2), "-12.05");
    }
}
