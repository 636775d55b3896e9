//! Lower-triangular matrices and production matrices.
//!
//! A production matrix `P` generates a triangle row by row from the seed
//! `(1, 0, 0, ...)` via `row[n+1] = row[n] * P`. Conversely
//! `P = M^{-1} * M_hat`, where `M_hat` is `M` with its first row removed.

use std::fmt;

use crate::algebra::{ExactScalar, MultiPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::series::PowerSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<ExactScalar>>,
}

impl Triangle {
    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Precondition(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(Triangle { rows })
    }

    /// Builds a triangle from integer rows; panics on a malformed shape.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Triangle::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| ExactScalar::int(c)).collect())
                .collect(),
        )
        .expect("well-formed integer rows")
    }

    pub fn identity(depth: usize) -> Self {
        Triangle::from_fn(depth, |n, k| if n == k { ExactScalar::one() } else { ExactScalar::zero() })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> ExactScalar>(depth: usize, mut f: F) -> Self {
        Triangle {
            rows: (0..depth).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<ExactScalar>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[ExactScalar] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> ExactScalar {
        self.rows[n].get(k).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn column(&self, k: usize) -> Vec<ExactScalar> {
        self.rows.iter().skip(k).map(|r| r[k].clone()).collect()
    }

    pub fn truncate(&self, depth: usize) -> Triangle {
        Triangle {
            rows: self.rows.iter().take(depth).cloned().collect(),
        }
    }

    pub fn flatten(&self) -> Vec<ExactScalar> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn map<F>(&self, mut f: F) -> Result<Triangle>
    where
        F: FnMut(&ExactScalar) -> Result<ExactScalar>,
    {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Triangle { rows })
    }

    pub fn substitute_rational(&self, v: Var, value: &Rational) -> Result<Triangle> {
        self.map(|c| c.substitute_rational(v, value))
    }

    /// Product truncated to the smaller depth.
    pub fn mul(&self, rhs: &Triangle) -> Triangle {
        let depth = self.depth().min(rhs.depth());
        Triangle::from_fn(depth, |n, k| {
            let mut acc = ExactScalar::zero();
            for j in k..=n {
                let (a, b) = (&self.rows[n][j], &rhs.rows[j][k]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        })
    }

    /// Inverse by forward substitution.
    pub fn invert(&self) -> Result<Triangle> {
        let depth = self.depth();
        let mut inv: Vec<Vec<ExactScalar>> = Vec::with_capacity(depth);
        for n in 0..depth {
            let diag = &self.rows[n][n];
            if diag.is_zero() {
                return Err(Error::NotInvertible { row: n });
            }
            let diag_inv = diag.recip()?;
            let mut row = vec![ExactScalar::zero(); n + 1];
            row[n] = diag_inv.clone();
            for k in (0..n).rev() {
                let mut acc = ExactScalar::zero();
                for j in k..n {
                    let (a, b) = (&self.rows[n][j], &inv[j][k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                row[k] = -(&acc * &diag_inv);
            }
            inv.push(row);
        }
        Ok(Triangle { rows: inv })
    }

    /// Row polynomials evaluated at 1, summed entry by entry.
    pub fn row_sums(&self) -> Vec<ExactScalar> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(ExactScalar::zero(), |acc, c| acc + c))
            .collect()
    }

    /// `M[n][k] = M[n][n-k]` on every row.
    pub fn is_centrally_symmetric(&self) -> bool {
        self.rows
            .iter()
            .all(|r| (0..r.len()).all(|k| r[k] == r[r.len() - 1 - k]))
    }

    /// Every row equals its reverse or the negative of its reverse.
    pub fn is_centrally_symmetric_up_to_sign(&self) -> bool {
        self.rows.iter().all(|r| {
            let n = r.len();
            (0..n).all(|k| r[k] == r[n - 1 - k]) || (0..n).all(|k| r[k] == -&r[n - 1 - k])
        })
    }

    /// Row `n` read as a polynomial in `v`, when every entry is polynomial.
    pub fn row_polynomial(&self, n: usize, v: Var) -> Option<MultiPoly> {
        let mut acc = MultiPoly::zero();
        for (k, c) in self.rows[n].iter().enumerate() {
            acc = acc + c.as_poly()? * MultiPoly::var(v).pow(k as u32);
        }
        Some(acc)
    }

    /// Symbols occurring in any entry, canonical order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.rows.iter().flatten().flat_map(|c| c.variables()).collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `Triangle[n][k] = [x^n v^k] g` for `n < depth`.
pub fn triangle_from_gf(g: &PowerSeries, v: Var, depth: usize) -> Result<Triangle> {
    if depth > g.order() + 1 {
        return Err(Error::DepthExceeded {
            requested: depth,
            available: g.order() + 1,
        });
    }
    let mut rows = Vec::with_capacity(depth);
    for n in 0..depth {
        let c = &g.coeffs()[n];
        let (num, den) = match c {
            ExactScalar::Frac(f) => {
                if f.denom().degree_in(v) > 0 {
                    return Err(Error::NonPolynomialCoefficient { index: n, var: v.symbol() });
                }
                (f.numer().clone(), Some(ExactScalar::from_poly(f.denom().clone())))
            }
            other => (other.as_poly().expect("polynomial layer"), None),
        };
        let degree = num.degree_in(v);
        if degree as usize > n {
            return Err(Error::DegreeOverflow { index: n, degree, var: v.symbol() });
        }
        let row = (0..=n)
            .map(|k| {
                let entry = ExactScalar::from_poly(num.coeff_in(v, k as u32));
                match &den {
                    Some(d) => entry.checked_div(d),
                    None => Ok(entry),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Triangle::from_rows(rows)
}

/// Almost-lower-triangular matrix: entries with `j > i + 1` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductionMatrix {
    entries: Vec<Vec<ExactScalar>>,
}

impl ProductionMatrix {
    pub fn new(entries: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let size = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Precondition(format!("row {i} of a {size}x{size} matrix has {} entries", row.len())));
            }
            if let Some(j) = (i + 2..size).find(|&j| !row[j].is_zero()) {
                return Err(Error::Precondition(format!("nonzero entry at ({i}, {j}) above the superdiagonal")));
            }
        }
        Ok(ProductionMatrix { entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> ExactScalar>(size: usize, mut f: F) -> Self {
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if j > i + 1 { ExactScalar::zero() } else { f(i, j) })
                    .collect()
            })
            .collect();
        ProductionMatrix { entries }
    }

    /// Jacobi matrix with diagonal `b`, superdiagonal 1 and subdiagonal `lambda`
    /// (`lambda[0]` sits at position `(1, 0)`).
    pub fn tridiagonal(b: &[ExactScalar], lambda: &[ExactScalar], size: usize) -> Result<Self> {
        if b.len() < size || lambda.len() + 1 < size {
            return Err(Error::DepthExceeded {
                requested: size,
                available: b.len().min(lambda.len() + 1),
            });
        }
        Ok(ProductionMatrix::from_fn(size, |i, j| {
            if j == i + 1 {
                ExactScalar::one()
            } else if j == i {
                b[i].clone()
            } else if j + 1 == i {
                lambda[j].clone()
            } else {
                ExactScalar::zero()
            }
        }))
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<ExactScalar>] {
        &self.entries
    }

    pub fn truncate(&self, size: usize) -> ProductionMatrix {
        let size = size.min(self.size());
        ProductionMatrix {
            entries: self.entries[..size].iter().map(|r| r[..size].to_vec()).collect(),
        }
    }

    /// Entries vanish below the subdiagonal.
    pub fn is_tridiagonal(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().take(i.saturating_sub(1)).all(ExactScalar::is_zero))
    }

    pub fn diagonal(&self) -> Vec<ExactScalar> {
        (0..self.size()).map(|i| self.entries[i][i].clone()).collect()
    }

    /// Entries `(i+1, i)`.
    pub fn subdiagonal(&self) -> Vec<ExactScalar> {
        (1..self.size()).map(|i| self.entries[i][i - 1].clone()).collect()
    }

    /// Entries `(i, i+1)`.
    pub fn superdiagonal(&self) -> Vec<ExactScalar> {
        (1..self.size()).map(|i| self.entries[i - 1][i].clone()).collect()
    }

    pub fn map<F>(&self, mut f: F) -> Result<ProductionMatrix>
    where
        F: FnMut(&ExactScalar) -> Result<ExactScalar>,
    {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductionMatrix { entries })
    }
}

impl fmt::Display for ProductionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Generates `depth` rows from the seed `e0` with `row[n+1] = row[n] * P`.
pub fn triangle_from_production(p: &ProductionMatrix, depth: usize) -> Result<Triangle> {
    if depth > p.size() {
        return Err(Error::DepthExceeded {
            requested: depth,
            available: p.size(),
        });
    }
    let mut rows: Vec<Vec<ExactScalar>> = Vec::with_capacity(depth);
    if depth == 0 {
        return Ok(Triangle { rows });
    }
    rows.push(vec![ExactScalar::one()]);
    for n in 1..depth {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let mut acc = ExactScalar::zero();
                for (j, m) in prev.iter().enumerate() {
                    let entry = p.get(j, k);
                    if !m.is_zero() && !entry.is_zero() {
                        acc = acc + m * entry;
                    }
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    Ok(Triangle { rows })
}

/// `P = M^{-1} M_hat` on the `(depth-1) x (depth-1)` window.
pub fn production_from_triangle(m: &Triangle) -> Result<ProductionMatrix> {
    let depth = m.depth();
    if depth < 2 {
        return Err(Error::DepthExceeded { requested: 2, available: depth });
    }
    let inv = m.invert()?;
    let size = depth - 1;
    Ok(ProductionMatrix::from_fn(size, |i, j| {
        let mut acc = ExactScalar::zero();
        for k in 0..=i {
            let a = &inv.rows[i][k];
            let b = m.get(k + 1, j);
            if !a.is_zero() && !b.is_zero() {
                acc = acc + a * &b;
            }
        }
        acc
    }))
}

pub const TYPE_A_WINDOW: usize = 7;

/// `(sign, power of a)` for each entry of the a-parameterized type-A window;
/// entries not listed are zero.
const TYPE_A_PATTERN: [&[(i64, u32)]; TYPE_A_WINDOW] = [
    &[(-1, 0), (-1, 0)],
    &[(1, 1), (1, 0), (-1, 0)],
    &[(-1, 2), (-1, 1), (1, 0), (-1, 0)],
    &[(1, 2), (1, 2), (1, 1), (1, 0), (-1, 0)],
    &[(-1, 3), (-1, 3), (-1, 2), (-1, 1), (1, 0), (-1, 0)],
    &[(1, 3), (1, 3), (1, 2), (1, 2), (1, 1), (1, 0), (-1, 0)],
    &[(-1, 4), (-1, 4), (-1, 3), (-1, 3), (-1, 2), (-1, 1), (1, 0)],
];

/// The a-parameterized production matrix whose `a = 2` member produces the
/// inverse of T3. Only the 7x7 window is defined.
pub fn type_a_production(a: &ExactScalar, size: usize) -> Result<ProductionMatrix> {
    if size > TYPE_A_WINDOW {
        return Err(Error::DepthExceeded {
            requested: size,
            available: TYPE_A_WINDOW,
        });
    }
    Ok(ProductionMatrix::from_fn(size, |i, j| match TYPE_A_PATTERN[i].get(j) {
        Some(&(sign, power)) => a.pow(power) * ExactScalar::int(sign),
        None => ExactScalar::zero(),
    }))
}

/// Block production matrix with 2x2 diagonal blocks `[[-1, -1], [b, a]]`
/// linked by `-1` on the superdiagonal.
pub fn type_b_production(a: &ExactScalar, b: &ExactScalar, size: usize) -> ProductionMatrix {
    ProductionMatrix::from_fn(size, |i, j| {
        let even = i % 2 == 0;
        if j == i + 1 {
            ExactScalar::int(-1)
        } else if j == i {
            if even {
                ExactScalar::int(-1)
            } else {
                a.clone()
            }
        } else if j + 1 == i && !even {
            b.clone()
        } else {
            ExactScalar::zero()
        }
    })
}
