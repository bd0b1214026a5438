//! Working precision and decimal formatting for MPFR-backed values.

use rug::float::Round;
use rug::ops::Pow;
use rug::{Assign, Complex, Float, Integer};

use crate::error::{Error, Result};

/// Arbitrary-precision real used for every asymptotic evaluation.
pub type HighFloat = Float;
/// Arbitrary-precision complex value.
pub type HighComplex = Complex;

const GUARD_BITS: u32 = 32;

/// Decimal working precision. Values are carried with a few guard bits on
/// top of the requested digit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Self { digits: Self::DEFAULT_DIGITS }
    }
}

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 60;

    pub fn new(digits: u32) -> Self {
        Self { digits: digits.max(1) }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
    }

    /// A precision with `extra` more binary digits, for intermediate steps
    /// that cancel.
    pub fn bits_with_guard(&self, extra: u32) -> u32 {
        self.bits() + extra
    }

    pub fn float<T>(&self, value: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }

    pub fn complex<T>(&self, value: T) -> Complex
    where
        Complex: Assign<T>,
    {
        Complex::with_val(self.bits(), value)
    }

    pub fn parse(&self, text: &str) -> Result<Float> {
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::InvalidArgument(format!("cannot parse {text:?} as a real: {e}")))?;
        Ok(self.float(parsed))
    }

    pub fn pi(&self) -> Float {
        self.float(rug::float::Constant::Pi)
    }

    /// `10^-(digits - 5)`: the agreement tolerance used between independent
    /// evaluation routes.
    pub fn route_tolerance(&self) -> Float {
        let exp = -(self.digits as i32 - 5);
        self.float(10).pow(exp)
    }
}

/// Round a decimal digit string to `sig` digits, half to even. Returns the
/// rounded digits and whether rounding carried into a new leading digit.
fn round_digits_half_even(digits: &str, sig: usize) -> (String, bool) {
    let bytes = digits.as_bytes();
    if bytes.len() <= sig {
        let mut out = digits.to_string();
        while out.len() < sig {
            out.push('0');
        }
        return (out, false);
    }
    let kept = &bytes[..sig];
    let first_dropped = bytes[sig] - b'0';
    let rest_nonzero = bytes[sig + 1..].iter().any(|&b| b != b'0');
    let last_kept_odd = (kept[sig - 1] - b'0') % 2 == 1;
    let round_up = first_dropped > 5 || (first_dropped == 5 && (rest_nonzero || last_kept_odd));
    let mut out: Vec<u8> = kept.to_vec();
    if !round_up {
        return (String::from_utf8(out).unwrap(), false);
    }
    let mut i = sig;
    loop {
        if i == 0 {
            out.insert(0, b'1');
            out.truncate(sig);
            return (String::from_utf8(out).unwrap(), true);
        }
        i -= 1;
        if out[i] == b'9' {
            out[i] = b'0';
        } else {
            out[i] += 1;
            return (String::from_utf8(out).unwrap(), false);
        }
    }
}

fn mantissa_form(negative: bool, digits: &str, exp10: i64) -> String {
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    s.push_str(&digits[..1]);
    if digits.len() > 1 {
        s.push('.');
        s.push_str(&digits[1..]);
    }
    s.push('e');
    s.push_str(&exp10.to_string());
    s
}

/// Scientific notation `d.ddddde<exp>` with `sig` significant digits taken
/// from the exact decimal expansion (round half to even).
pub fn sci_integer(value: &Integer, sig: usize) -> String {
    assert!(sig >= 1);
    if *value == 0 {
        return "0".to_string();
    }
    let digits = value.to_string_radix(10);
    let (negative, digits) = match digits.strip_prefix('-') {
        Some(d) => (true, d.to_string()),
        None => (false, digits),
    };
    let (rounded, carried) = round_digits_half_even(&digits, sig);
    let exp10 = digits.len() as i64 - 1 + carried as i64;
    mantissa_form(negative, &rounded, exp10)
}

/// Scientific notation for a real, in the same layout as [`sci_integer`].
pub fn sci_float(value: &Float, sig: usize) -> String {
    assert!(sig >= 1);
    if value.is_zero() {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    // Extra digits so the final decimal rounding happens on a decimal string.
    let (negative, digits, exp) = value.to_sign_string_exp_round(10, Some(sig + 20), Round::Nearest);
    let exp = exp.expect("finite nonzero float has an exponent") as i64;
    let (rounded, carried) = round_digits_half_even(&digits, sig);
    mantissa_form(negative, &rounded, exp - 1 + carried as i64)
}

/// Fixed-point rendering with `decimals` places, half to even.
pub fn fixed_float(value: &Float, decimals: u32) -> String {
    let scale = Integer::from(10).pow(decimals);
    let scaled = Float::with_val(value.prec() + 16, value * &scale);
    let rounded = scaled.round_even();
    let int = rounded.to_integer().expect("finite value");
    let negative = int < 0;
    let abs = int.abs();
    let (whole, frac) = abs.div_rem(scale);
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    s.push_str(&whole.to_string());
    if decimals > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = decimals as usize));
    }
    s
}
