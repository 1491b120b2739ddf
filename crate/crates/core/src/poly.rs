//! Exact integers and dense univariate integer polynomials.
//!
//! Every polynomial carries a variable tag. Ring operations require both
//! operands to share the tag; substitution (`compose`) replaces the tag of
//! the outer polynomial with the tag of the inner one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every count and coefficient.
pub type ExactInt = BigInt;

/// Variable tag of an [`IntPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Class of a general variety, `[X]`.
    X,
    /// Class of an elliptic curve, `[E]`.
    E,
    /// Formal variable of a virtual Poincaré polynomial.
    Lower,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::E => "E",
            Var::Lower => "x",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Dense polynomial with exact integer coefficients, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<ExactInt>,
    var: Var,
}

impl IntPoly {
    pub fn new(var: Var, coeffs: Vec<ExactInt>) -> Self {
        let mut p = IntPoly { coeffs, var };
        p.trim();
        p
    }

    pub fn from_i64s(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        IntPoly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, ExactInt::one())
    }

    pub fn constant(var: Var, c: ExactInt) -> Self {
        Self::new(var, vec![c])
    }

    /// The polynomial consisting of the variable itself.
    pub fn variable(var: Var) -> Self {
        Self::monomial(var, ExactInt::one(), 1)
    }

    pub fn monomial(var: Var, c: ExactInt, degree: usize) -> Self {
        let mut coeffs = vec![ExactInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Coefficients, lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Coefficient of `var^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&ExactInt> {
        self.coeffs.last()
    }

    /// Same coefficients, different tag. Used when a class polynomial in `X`
    /// is printed in the `E` notation of the tables.
    pub fn with_var(&self, var: Var) -> Self {
        IntPoly {
            coeffs: self.coeffs.clone(),
            var,
        }
    }

    fn check_var(&self, other: &IntPoly) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    pub fn checked_add(&self, other: &IntPoly) -> Result<IntPoly> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(IntPoly::new(self.var, coeffs))
    }

    pub fn checked_sub(&self, other: &IntPoly) -> Result<IntPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &IntPoly) -> Result<IntPoly> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::zero(self.var));
        }
        let mut coeffs = vec![ExactInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(IntPoly::new(self.var, coeffs))
    }

    pub fn scale(&self, c: &ExactInt) -> IntPoly {
        IntPoly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self^exp` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut exp: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one(self.var);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at `t` (Horner).
    pub fn eval(&self, t: &ExactInt) -> ExactInt {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactInt::zero(), |acc, c| acc * t + c)
    }

    /// Substitutes `inner` for the variable: returns `self(inner)` tagged
    /// with `inner`'s variable.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let var = inner.var;
        self.coeffs.iter().rev().fold(IntPoly::zero(var), |acc, c| {
            let shifted = &acc * inner;
            shifted
                .checked_add(&IntPoly::constant(var, c.clone()))
                .expect("same variable")
        })
    }

    /// Human-readable form in descending powers, e.g. `E^3 - 6E^2 + 20E - 96`.
    pub fn to_plain(&self) -> String {
        self.render(self.var.symbol(), false)
    }

    /// Plain form printed with a different variable symbol.
    pub fn to_plain_as(&self, symbol: &str) -> String {
        self.render(symbol, false)
    }

    /// `$...$`-wrapped LaTeX form.
    pub fn to_latex(&self) -> String {
        self.to_latex_as(self.var.symbol())
    }

    pub fn to_latex_as(&self, symbol: &str) -> String {
        format!("${}$", self.render(symbol, true))
    }

    /// Coefficient array, lowest degree first, e.g. `[-96,20,-6,1]`.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", body.join(","))
    }

    /// Parses a coefficient array (lowest degree first). Entries may be JSON
    /// integers of any size or decimal strings.
    pub fn parse_json(var: Var, text: &str) -> Result<IntPoly> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse(format!("expected a JSON array, got `{text}`")))?;
        let coeffs = items
            .iter()
            .map(|item| {
                let digits = match item {
                    serde_json::Value::Number(n) => n.to_string(),
                    serde_json::Value::String(s) => s.clone(),
                    other => return Err(Error::Parse(format!("not an integer: {other}"))),
                };
                digits
                    .parse::<ExactInt>()
                    .map_err(|_| Error::Parse(format!("not an integer: {digits}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(var, coeffs))
    }

    fn render(&self, symbol: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if deg == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match deg {
                0 => {}
                1 => out.push_str(symbol),
                d if latex && d >= 10 => out.push_str(&format!("{symbol}^{{{d}}}")),
                d => out.push_str(&format!("{symbol}^{d}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

// Operator forms panic on a variable mismatch; use the `checked_*` methods
// when the tags are not known to agree.
impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}
