//! Exact parsing of side lengths: integers, decimals (`1.25`, `3e-2`) and
//! fractions (`233/7`) all become exact rationals.

use bicentric_core::Rational;
use num_traits::{One, Zero};

/// A comma-separated side list, e.g. `29,30,31,32,33` or `1/2,1.5,2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides(pub Vec<Rational>);

const MAX_EXPONENT: i32 = 1000;

pub fn parse_sides(s: &str) -> Result<Sides, String> {
    let sides = s.split(',').map(|part| parse_rational(part.trim())).collect::<Result<Vec<_>, _>>()?;
    Ok(Sides(sides))
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_decimal(num.trim())?;
        let den = parse_decimal(den.trim())?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(num / den);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rational, String> {
    let bad = || format!("not a number: {s:?}");
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    if exponent.abs() > MAX_EXPONENT {
        return Err(format!("exponent out of range in {s:?}"));
    }
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value: Rational = all_digits.parse().map_err(|_| bad())?;
    let shift = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(10.into());
    let power = (0..shift.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &ten);
    value = if shift >= 0 { value * power } else { value / power };
    Ok(if negative { -value } else { value })
}
