//! Grothendieck-ring classes of configuration spaces and their virtual
//! Poincaré polynomials.
//!
//! * `[F_n(X)] = Σ_k (-1)^(n-k) s(n,k) [X]^k`
//! * `[F_n^0(E)] = Σ_k (-1)^(n-k) s_m(n,k) [E]^(k-1)`
//!
//! Both come from the inclusion-exclusion decomposition over higher
//! diagonals `Δ_σ ≅ X^l(σ)` with coefficients `μ(0, σ)`; for the sum-zero
//! fibre each diagonal contributes `[E]^(l-1)` times the `gcd(σ)²` torsion
//! points. The `*_by_mobius` functions assemble that sum directly.
//!
//! For `n = 0` both classes are `1` (the empty configuration).

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::shapes_of;
use crate::poly::{ExactInt, IntPoly, Var};
use crate::poset::mobius_of_shape;
use crate::stirling::{StirlingTable, DEFAULT_N_MAX};

/// Which configuration space a class describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// Ordered configurations `F_n(X)`.
    Fn,
    /// Sum-zero configurations `F_n^0(E)` on an elliptic curve.
    Fn0,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::Fn => "fn",
            Space::Fn0 => "fn0",
        }
    }

    pub fn var(self) -> Var {
        match self {
            Space::Fn => Var::X,
            Space::Fn0 => Var::E,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Space> {
        match s {
            "fn" => Ok(Space::Fn),
            "fn0" => Ok(Space::Fn0),
            other => Err(Error::Parse(format!("unknown space `{other}` (fn, fn0)"))),
        }
    }
}

/// Output formats for rendered rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Plain,
    Latex,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "latex" => Ok(OutputFormat::Latex),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Parse(format!(
                "unknown format `{other}` (plain, latex, json, csv)"
            ))),
        }
    }
}

/// A class polynomial together with the space and size it describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPolynomial {
    pub poly: IntPoly,
    pub n: usize,
    pub space: Space,
}

impl ClassPolynomial {
    /// Builds the class from a precomputed table.
    pub fn from_table(table: &StirlingTable, space: Space, n: usize) -> Result<ClassPolynomial> {
        let coeffs = match space {
            Space::Fn => (0..=n)
                .map(|k| Ok(signed(n, k, table.s(n, k)?)))
                .collect::<Result<Vec<_>>>()?,
            Space::Fn0 if n == 0 => vec![ExactInt::from(1)],
            Space::Fn0 => (1..=n)
                .map(|k| Ok(signed(n, k, table.s_mod(n, k)?)))
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(ClassPolynomial {
            poly: IntPoly::new(space.var(), coeffs),
            n,
            space,
        })
    }

    /// Plain rendering with the `E` symbol used by the tables.
    pub fn to_plain(&self) -> String {
        self.poly.to_plain_as("E")
    }

    pub fn render_row(&self, format: OutputFormat) -> String {
        render_row(self.n, self.space, &self.poly, "E", format)
    }
}

/// One output row for the polynomial `poly` attached to `(n, space)`,
/// printed with variable `symbol`.
///
/// * plain: `E^3 - 6E^2 + 20E - 96`
/// * latex: `4 & $E^3 - 6E^2 + 20E - 96$ \\`
/// * json: `{"n":4,"space":"fn0","coeffs":["-96","20","-6","1"]}`, lowest degree first
/// * csv: `4,3,-96,20,-6,1` (n, degree, coefficients lowest first)
pub fn render_row(
    n: usize,
    space: Space,
    poly: &IntPoly,
    symbol: &str,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Plain => poly.to_plain_as(symbol),
        OutputFormat::Latex => format!("{n} & {} \\\\", poly.to_latex_as(symbol)),
        OutputFormat::Json => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| format!("\"{c}\"")).collect();
            format!(
                "{{\"n\":{n},\"space\":\"{space}\",\"coeffs\":[{}]}}",
                coeffs.join(",")
            )
        }
        OutputFormat::Csv => {
            let mut fields = vec![
                n.to_string(),
                poly.degree().map_or("-1".to_string(), |d| d.to_string()),
            ];
            fields.extend(poly.coeffs().iter().map(ToString::to_string));
            fields.join(",")
        }
    }
}

fn signed(n: usize, k: usize, v: ExactInt) -> ExactInt {
    if (n + k).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn check_range(n: usize) -> Result<()> {
    if n > DEFAULT_N_MAX {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as u64,
            expected: format!("n <= {DEFAULT_N_MAX}"),
        });
    }
    Ok(())
}

/// `[F_n(X)]` in the variable `X`.
pub fn class_fn(n: usize) -> Result<ClassPolynomial> {
    check_range(n)?;
    ClassPolynomial::from_table(&StirlingTable::new(n), Space::Fn, n)
}

/// `[F_n^0(E)]` in the variable `E`.
pub fn class_fn0(n: usize) -> Result<ClassPolynomial> {
    check_range(n)?;
    ClassPolynomial::from_table(&StirlingTable::new(n), Space::Fn0, n)
}

/// `Σ_σ μ(0, σ) [X]^l(σ)`, summed over shapes with their multiplicities.
pub fn class_fn_by_mobius(n: usize) -> IntPoly {
    let mut coeffs = vec![ExactInt::zero(); n + 1];
    for shape in shapes_of(n) {
        coeffs[shape.len()] += shape.multiplicity() * mobius_of_shape(&shape);
    }
    IntPoly::new(Var::X, coeffs)
}

/// `Σ_σ μ(0, σ) gcd(σ)² [E]^(l(σ)-1)`; each diagonal meets the sum-zero
/// fibre in `E^(l-1)` times the `gcd(σ)`-torsion.
pub fn class_fn0_by_mobius(n: usize) -> IntPoly {
    if n == 0 {
        return IntPoly::one(Var::E);
    }
    let mut coeffs = vec![ExactInt::zero(); n];
    for shape in shapes_of(n) {
        let g = ExactInt::from(shape.gcd().expect("n >= 1"));
        coeffs[shape.len() - 1] += shape.multiplicity() * mobius_of_shape(&shape) * &g * &g;
    }
    IntPoly::new(Var::E, coeffs)
}

/// Virtual Poincaré polynomial of a smooth projective genus-one curve:
/// Betti numbers 1, 2, 1.
pub fn elliptic_curve_poincare() -> IntPoly {
    IntPoly::from_i64s(Var::Lower, &[1, 2, 1])
}

/// Substitutes `sx = S(X)` (a polynomial in `x`) for the class variable.
pub fn virtual_poincare(class: &ClassPolynomial, sx: &IntPoly) -> Result<IntPoly> {
    if sx.var() != Var::Lower {
        return Err(Error::VariableMismatch {
            left: Var::Lower,
            right: sx.var(),
        });
    }
    Ok(class.poly.compose(sx))
}

/// Rendered rows for `n_from..=n_to`.
pub fn table_rows(
    space: Space,
    n_from: usize,
    n_to: usize,
    format: OutputFormat,
) -> Result<Vec<String>> {
    if n_from == 0 || n_from > n_to || n_to > DEFAULT_N_MAX {
        return Err(Error::OutOfRange {
            what: "n_to",
            value: n_to as u64,
            expected: format!("1 <= n_from ({n_from}) <= n_to <= {DEFAULT_N_MAX}"),
        });
    }
    let table = StirlingTable::new(n_to);
    (n_from..=n_to)
        .map(|n| ClassPolynomial::from_table(&table, space, n).map(|c| c.render_row(format)))
        .collect()
}
