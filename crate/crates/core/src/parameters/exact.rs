//! Exact real expressions and binary fixed-point evaluation to arbitrary precision.
//!
//! A fixed-point number with `b` fractional bits is the integer `round(x * 2^b)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Extra bits carried through intermediate steps.
const GUARD_BITS: u64 = 48;

/// A real number given by an expression in rationals, `pi`, `e`, `log` and `sqrt`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactReal {
    /// `num / den` with `den > 0`, in lowest terms.
    Rational(BigInt, BigInt),
    Pi,
    E,
    Neg(Box<ExactReal>),
    Add(Box<ExactReal>, Box<ExactReal>),
    Sub(Box<ExactReal>, Box<ExactReal>),
    Mul(Box<ExactReal>, Box<ExactReal>),
    Div(Box<ExactReal>, Box<ExactReal>),
    Log(Box<ExactReal>),
    Sqrt(Box<ExactReal>),
}

impl ExactReal {
    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_zero() { (num, den) } else { (num / &g, den / &g) };
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok(ExactReal::Rational(n, d))
    }

    pub fn integer(n: i64) -> Self {
        ExactReal::Rational(BigInt::from(n), BigInt::one())
    }

    /// The decimal number printed by the shortest round-trip form of `x`.
    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite value {x}")));
        }
        parse_decimal(&format!("{x:e}"))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { tokens: tokenize(text)?, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::InvalidInput(format!("trailing input in expression '{text}'")));
        }
        Ok(e)
    }

    pub fn as_rational(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            ExactReal::Rational(n, d) => Some((n, d)),
            _ => None,
        }
    }

    pub fn neg(a: ExactReal) -> ExactReal {
        match a {
            ExactReal::Rational(n, d) => ExactReal::Rational(-n, d),
            a => ExactReal::Neg(Box::new(a)),
        }
    }

    pub fn add(a: ExactReal, b: ExactReal) -> ExactReal {
        match (&a, &b) {
            (ExactReal::Rational(n1, d1), ExactReal::Rational(n2, d2)) => {
                Self::rational(n1 * d2 + n2 * d1, d1 * d2).expect("nonzero denominators")
            }
            _ => ExactReal::Add(Box::new(a), Box::new(b)),
        }
    }

    pub fn sub(a: ExactReal, b: ExactReal) -> ExactReal {
        match (&a, &b) {
            (ExactReal::Rational(n1, d1), ExactReal::Rational(n2, d2)) => {
                Self::rational(n1 * d2 - n2 * d1, d1 * d2).expect("nonzero denominators")
            }
            _ => ExactReal::Sub(Box::new(a), Box::new(b)),
        }
    }

    pub fn mul(a: ExactReal, b: ExactReal) -> ExactReal {
        match (&a, &b) {
            (ExactReal::Rational(n1, d1), ExactReal::Rational(n2, d2)) => {
                Self::rational(n1 * n2, d1 * d2).expect("nonzero denominators")
            }
            (ExactReal::Rational(n, d), _) if n.is_one() && d.is_one() => b,
            (_, ExactReal::Rational(n, d)) if n.is_one() && d.is_one() => a,
            _ => ExactReal::Mul(Box::new(a), Box::new(b)),
        }
    }

    pub fn div(a: ExactReal, b: ExactReal) -> Result<ExactReal> {
        match (&a, &b) {
            (_, ExactReal::Rational(n, _)) if n.is_zero() => Err(Error::Domain("division by zero".into())),
            (ExactReal::Rational(n1, d1), ExactReal::Rational(n2, d2)) => Self::rational(n1 * d2, d1 * n2),
            (_, ExactReal::Rational(n, d)) if n.is_one() && d.is_one() => Ok(a),
            _ => Ok(ExactReal::Div(Box::new(a), Box::new(b))),
        }
    }

    pub fn log(a: ExactReal) -> ExactReal {
        ExactReal::Log(Box::new(a))
    }

    pub fn sqrt(a: ExactReal) -> ExactReal {
        ExactReal::Sqrt(Box::new(a))
    }

    /// Double-precision value.
    pub fn to_f64(&self) -> f64 {
        use ExactReal::*;
        match self {
            Rational(n, d) => rational_to_f64(n, d),
            Pi => std::f64::consts::PI,
            E => std::f64::consts::E,
            Neg(a) => -a.to_f64(),
            Add(a, b) => a.to_f64() + b.to_f64(),
            Sub(a, b) => a.to_f64() - b.to_f64(),
            Mul(a, b) => a.to_f64() * b.to_f64(),
            Div(a, b) => a.to_f64() / b.to_f64(),
            Log(a) => a.to_f64().ln(),
            Sqrt(a) => a.to_f64().sqrt(),
        }
    }

    /// `round(x * 2^bits)`, accurate to a few units in the last place for
    /// well-conditioned expressions.
    pub fn to_fixed(&self, bits: u64) -> Result<BigInt> {
        let wide = self.eval_fixed(bits + GUARD_BITS)?;
        Ok(round_shift(&wide, GUARD_BITS))
    }

    fn eval_fixed(&self, b: u64) -> Result<BigInt> {
        use ExactReal::*;
        Ok(match self {
            Rational(n, d) => div_round(&(n << b), d),
            Pi => fx_pi(b),
            E => fx_e(b),
            Neg(a) => -a.eval_fixed(b)?,
            Add(x, y) => x.eval_fixed(b)? + y.eval_fixed(b)?,
            Sub(x, y) => x.eval_fixed(b)? - y.eval_fixed(b)?,
            Mul(x, y) => round_shift(&(x.eval_fixed(b)? * y.eval_fixed(b)?), b),
            Div(x, y) => {
                let den = y.eval_fixed(b)?;
                if den.is_zero() {
                    return Err(Error::Domain(format!("division by zero in {self}")));
                }
                div_round(&(x.eval_fixed(b)? << b), &den)
            }
            Log(a) => {
                let v = a.eval_fixed(b)?;
                if !v.is_positive() {
                    return Err(Error::Domain(format!("logarithm of a nonpositive value in {self}")));
                }
                fx_ln(&v, b)
            }
            Sqrt(a) => {
                let v = a.eval_fixed(b)?;
                if v.is_negative() {
                    return Err(Error::Domain(format!("square root of a negative value in {self}")));
                }
                (v << b).sqrt()
            }
        })
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExactReal::*;
        match self {
            Rational(n, d) if d.is_one() && !n.is_negative() => write!(f, "{n}"),
            Rational(n, d) if d.is_one() => write!(f, "({n})"),
            Rational(n, d) => write!(f, "({n}/{d})"),
            Pi => write!(f, "pi"),
            E => write!(f, "e"),
            Neg(a) => write!(f, "(-{a})"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "({a} * {b})"),
            Div(a, b) => write!(f, "({a} / {b})"),
            Log(a) => write!(f, "log({a})"),
            Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

fn rational_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // both huge: scale down before converting
            let shift = n.bits().max(d.bits()).saturating_sub(1000);
            (n >> shift).to_f64().unwrap_or(f64::NAN) / (d >> shift).to_f64().unwrap_or(f64::NAN)
        }
    }
}

/// `round(a / d)` for `d > 0`.
pub(crate) fn div_round(a: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (a * &two + d).div_floor(&(d * two))
}

/// `round(a / 2^k)`.
pub(crate) fn round_shift(a: &BigInt, k: u64) -> BigInt {
    if k == 0 {
        return a.clone();
    }
    (a + (BigInt::one() << (k - 1))) >> k
}

/// `atanh(1/k)` in fixed point.
fn fx_atanh_inv(k: u64, b: u64) -> BigInt {
    let k2 = BigInt::from(k * k);
    let mut term = (BigInt::one() << b) / k;
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !term.is_zero() {
        sum += &term / (2 * i + 1);
        term /= &k2;
        i += 1;
    }
    sum
}

/// `atan(1/k)` in fixed point.
fn fx_atan_inv(k: u64, b: u64) -> BigInt {
    let k2 = BigInt::from(k * k);
    let mut term = (BigInt::one() << b) / k;
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !term.is_zero() {
        if i % 2 == 0 {
            sum += &term / (2 * i + 1);
        } else {
            sum -= &term / (2 * i + 1);
        }
        term /= &k2;
        i += 1;
    }
    sum
}

pub(crate) fn fx_pi(b: u64) -> BigInt {
    let w = b + 16;
    round_shift(&(fx_atan_inv(5, w) * 16 - fx_atan_inv(239, w) * 4), 16)
}

pub(crate) fn fx_ln2(b: u64) -> BigInt {
    let w = b + 16;
    round_shift(&(fx_atanh_inv(3, w) * 2), 16)
}

pub(crate) fn fx_e(b: u64) -> BigInt {
    let w = b + 16;
    let mut term = BigInt::one() << w;
    let mut sum = BigInt::zero();
    let mut n = 1u64;
    while !term.is_zero() {
        sum += &term;
        term /= n;
        n += 1;
    }
    round_shift(&sum, 16)
}

/// Natural logarithm of a positive fixed-point value.
pub(crate) fn fx_ln(x: &BigInt, b: u64) -> BigInt {
    let w = b + 16;
    let x = x << 16u64;
    // x = 2^k y with y in [1/sqrt 2, sqrt 2)
    let mut k = x.bits() as i64 - 1 - w as i64;
    let mut y = if k >= 0 { &x >> (k as u64) } else { &x << ((-k) as u64) };
    let one = BigInt::one() << w;
    // sqrt(2) * 2^w < y  <=>  y^2 > 2^(2w+1)
    if &y * &y > (BigInt::one() << (2 * w + 1)) {
        y >>= 1u64;
        k += 1;
    }
    let z = div_round(&((&y - &one) << w), &(&y + &one));
    let z2 = round_shift(&(&z * &z), w);
    let mut power = z;
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !power.is_zero() {
        sum += &power / (2 * i + 1);
        power = round_shift(&(&power * &z2), w);
        i += 1;
    }
    let ln = sum * 2 + fx_ln2(w) * k;
    round_shift(&ln, 16)
}

/// Fixed-point value to `f64`.
pub fn fixed_to_f64(v: &BigInt, bits: u64) -> f64 {
    let shift = v.bits().saturating_sub(60);
    let mant = (v >> shift).to_f64().unwrap_or(f64::NAN);
    mant * 2f64.powi(shift as i32 - bits as i32)
}

/// Number of fractional bits needed for `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u64 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect::<String>().to_ascii_lowercase()));
        } else if "+-*/()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::InvalidInput(format!("unexpected character '{c}' in expression '{text}'")));
        }
    }
    Ok(out)
}

fn parse_decimal(s: &str) -> Result<ExactReal> {
    let bad = || Error::InvalidInput(format!("malformed number '{s}'"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let (int, frac) = match mantissa.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mantissa, ""),
    };
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let digits = if neg { -digits } else { digits };
    let exp10 = exponent - frac.len() as i64;
    if exp10.unsigned_abs() > 10_000 {
        return Err(bad());
    }
    let p = num_traits::pow(BigInt::from(10), exp10.unsigned_abs() as usize);
    if exp10 >= 0 {
        ExactReal::rational(digits * p, 1)
    } else {
        ExactReal::rational(digits, p)
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.next() {
            Some(Token::Op(o)) if o == c => Ok(()),
            other => Err(Error::InvalidInput(format!("expected '{c}', found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<ExactReal> {
        let mut acc = self.term()?;
        while let Some(Token::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { ExactReal::add(acc, rhs) } else { ExactReal::sub(acc, rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ExactReal> {
        let mut acc = self.unary()?;
        while let Some(Token::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' { ExactReal::mul(acc, rhs) } else { ExactReal::div(acc, rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ExactReal> {
        if let Some(Token::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(ExactReal::neg(self.unary()?));
        }
        if let Some(Token::Op('+')) = self.peek() {
            self.pos += 1;
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<ExactReal> {
        match self.next() {
            Some(Token::Num(s)) => parse_decimal(&s),
            Some(Token::Op('(')) => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "pi" => Ok(ExactReal::Pi),
                "e" => Ok(ExactReal::E),
                "log" | "ln" | "sqrt" => {
                    self.expect('(')?;
                    let arg = self.expr()?;
                    self.expect(')')?;
                    Ok(if name == "sqrt" { ExactReal::sqrt(arg) } else { ExactReal::log(arg) })
                }
                _ => Err(Error::InvalidInput(format!("unknown name '{name}'"))),
            },
            other => Err(Error::InvalidInput(format!("unexpected token {other:?}"))),
        }
    }
}

impl std::str::FromStr for ExactReal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExactReal::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436025";
    const E_50: &str = "2.71828182845904523536028747135266249775724709369995";
    const LN3_50: &str = "1.09861228866810969139524523692252570464749055782274";

    fn digits(x: &ExactReal, d: u32) -> String {
        let bits = bits_for_digits(d) + 8;
        let v = x.to_fixed(bits).unwrap();
        let scaled = round_shift(&(v * num_traits::pow(BigInt::from(10), d as usize)), bits);
        scaled.to_string()
    }

    fn reference(s: &str) -> String {
        s.replace('.', "").trim_start_matches('0').to_string()
    }

    fn close(got: &str, want: &str) {
        let g: BigInt = got.parse().unwrap();
        let w: BigInt = want[..got.len().min(want.len())].parse().unwrap();
        assert!((g - w).abs() <= BigInt::from(1), "{got} vs {want}");
    }

    #[test]
    fn constants_to_fifty_digits() {
        close(&digits(&ExactReal::Pi, 50), &reference(PI_50));
        close(&digits(&ExactReal::E, 50), &reference(E_50));
        close(&digits(&ExactReal::parse("log(2)").unwrap(), 50), &reference(LN2_50));
        close(&digits(&ExactReal::parse("log(3)").unwrap(), 50), &reference(LN3_50));
    }

    #[test]
    fn log_identities_hold_at_high_precision() {
        let bits = 400;
        let l6 = ExactReal::parse("log(6)").unwrap().to_fixed(bits).unwrap();
        let l2 = ExactReal::parse("log(2)").unwrap().to_fixed(bits).unwrap();
        let l3 = ExactReal::parse("log(3)").unwrap().to_fixed(bits).unwrap();
        assert!((l6 - l2 - l3).abs() <= BigInt::from(4));
        let small = ExactReal::parse("log(1/1000)").unwrap().to_fixed(bits).unwrap();
        let big = ExactReal::parse("log(1000)").unwrap().to_fixed(bits).unwrap();
        assert!((small + big).abs() <= BigInt::from(4));
        let l1 = ExactReal::parse("log(1)").unwrap().to_fixed(bits).unwrap();
        assert!(l1.abs() <= BigInt::from(2));
    }

    #[test]
    fn sqrt_and_division() {
        let bits = 300;
        let s2 = ExactReal::parse("sqrt(2) * sqrt(2)").unwrap().to_fixed(bits).unwrap();
        assert!((s2 - (BigInt::from(2) << bits)).abs() <= BigInt::from(4));
        let q = ExactReal::parse("pi / pi").unwrap().to_fixed(bits).unwrap();
        assert!((q - (BigInt::one() << bits)).abs() <= BigInt::from(4));
    }

    #[test]
    fn parser_folds_rationals_and_round_trips() {
        assert_eq!(ExactReal::parse("1/3").unwrap(), ExactReal::rational(1, 3).unwrap());
        assert_eq!(ExactReal::parse("0.25").unwrap(), ExactReal::rational(1, 4).unwrap());
        assert_eq!(ExactReal::parse("2.5e-1").unwrap(), ExactReal::rational(1, 4).unwrap());
        assert_eq!(ExactReal::parse("-(3 - 1) * 2").unwrap(), ExactReal::integer(-4));
        for text in ["1/pi", "pi/log(2)", "log(3 + 1/pi) * 2/3", "-e", "sqrt(5) - 1/7", "0.1"] {
            let x = ExactReal::parse(text).unwrap();
            let back = ExactReal::parse(&x.to_string()).unwrap();
            assert_eq!(x, back, "{text}");
        }
        assert!((ExactReal::parse("pi/4").unwrap().to_f64() - std::f64::consts::FRAC_PI_4).abs() < 1e-16);
        assert!(ExactReal::parse("foo(2)").is_err());
        assert!(ExactReal::parse("1/0").is_err());
        assert!(ExactReal::parse("(1 + 2").is_err());
        assert!(ExactReal::parse("log(-1)").unwrap().to_fixed(100).is_err());
    }

    #[test]
    fn from_f64_uses_shortest_decimal() {
        assert_eq!(ExactReal::from_f64(0.1).unwrap(), ExactReal::rational(1, 10).unwrap());
        assert_eq!(ExactReal::from_f64(-2.0).unwrap(), ExactReal::integer(-2));
        assert_eq!(ExactReal::from_f64(1e-300).unwrap().to_f64(), 1e-300);
    }

    #[test]
    fn fixed_to_f64_conversion() {
        let v = ExactReal::Pi.to_fixed(200).unwrap();
        assert_eq!(fixed_to_f64(&v, 200), std::f64::consts::PI);
        assert!((-v).is_negative());
    }
}
