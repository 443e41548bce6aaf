//! Small dense matrices over Z/mZ.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MatrixModM {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>,
}

/// Outcome of an order search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixOrder {
    Finite(u64),
    /// No power up to the cap was the identity.
    Exceeded(u64),
}

impl MatrixModM {
    /// Row-major entries; each is reduced mod `modulus`.
    pub fn new(rows: usize, cols: usize, modulus: u64, entries: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if modulus < 2 {
            return Err(Error::Shape(format!("modulus {modulus} is below 2")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let m = modulus as i64;
        Ok(MatrixModM {
            rows,
            cols,
            modulus,
            entries: entries.into_iter().map(|x| x.rem_euclid(m) as u64).collect(),
        })
    }

    pub fn identity(n: usize, modulus: u64) -> Result<Self> {
        Self::diagonal(&vec![1; n], modulus)
    }

    pub fn diagonal(diag: &[i64], modulus: u64) -> Result<Self> {
        let n = diag.len();
        let mut entries = vec![0i64; n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = d;
        }
        Self::new(n, n, modulus, entries)
    }

    /// Square 0/1 matrix from semicolon-separated binary rows, e.g. `"01;11"`.
    pub fn parse_binary_rows(spec: &str) -> Result<Self> {
        let rows: Vec<&str> = spec.split(';').map(str::trim).collect();
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.chars().count() != n {
                return Err(Error::Parse(format!(
                    "row {row:?} has {} digits, expected {n}",
                    row.chars().count()
                )));
            }
            for ch in row.chars() {
                match ch {
                    '0' => entries.push(0),
                    '1' => entries.push(1),
                    _ => return Err(Error::Parse(format!("unexpected digit {ch:?} in {spec:?}"))),
                }
            }
        }
        Self::new(n, n, 2, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c)))
    }

    pub fn mul(&self, other: &MatrixModM) -> Result<MatrixModM> {
        if self.modulus != other.modulus {
            return Err(Error::Shape(format!(
                "moduli {} and {} differ",
                self.modulus, other.modulus
            )));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let m = u128::from(self.modulus);
        let mut entries = vec![0u64; self.rows * other.cols];
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u128;
                for k in 0..self.cols {
                    acc = (acc + u128::from(self.get(r, k)) * u128::from(other.get(k, c))) % m;
                }
                entries[r * other.cols + c] = acc as u64;
            }
        }
        Ok(MatrixModM {
            rows: self.rows,
            cols: other.cols,
            modulus: self.modulus,
            entries,
        })
    }

    /// Square-and-multiply power; `a^0` is the identity.
    pub fn pow(&self, mut e: u64) -> Result<MatrixModM> {
        if !self.is_square() {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut result = Self::identity(self.rows, self.modulus)?;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `a * v` for a column vector `v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let m = u128::from(self.modulus);
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(0u128, |acc, k| {
                    (acc + u128::from(self.get(r, k)) * u128::from(v[k])) % m
                }) as u64
            })
            .collect()
    }

    pub fn sub(&self, other: &MatrixModM) -> Result<MatrixModM> {
        if (self.rows, self.cols, self.modulus) != (other.rows, other.cols, other.modulus) {
            return Err(Error::Shape("subtraction of mismatched matrices".into()));
        }
        let m = self.modulus;
        Ok(MatrixModM {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + m - b) % m)
                .collect(),
            ..self.clone()
        })
    }

    /// Default power cap: `2 * modulus^rows`, saturating.
    pub fn default_order_cap(&self) -> u64 {
        u32::try_from(self.rows)
            .ok()
            .and_then(|r| self.modulus.checked_pow(r))
            .and_then(|x| x.checked_mul(2))
            .unwrap_or(u64::MAX)
    }

    /// Least `e ≥ 1` with `a^e = I`, walking powers up to `cap`.
    pub fn order(&self, cap: u64) -> Result<MatrixOrder> {
        if !self.is_square() {
            return Err(Error::Shape("order of a non-square matrix".into()));
        }
        let mut x = self.clone();
        for e in 1..=cap {
            if x.is_identity() {
                return Ok(MatrixOrder::Finite(e));
            }
            x = x.mul(self)?;
        }
        Ok(MatrixOrder::Exceeded(cap))
    }

    /// Rows as strings of residues, concatenated when the modulus is 2.
    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                let row = (0..self.cols).map(|c| self.get(r, c).to_string());
                if self.modulus == 2 {
                    row.collect::<String>()
                } else {
                    row.collect::<Vec<_>>().join(" ")
                }
            })
            .collect()
    }
}

impl fmt::Debug for MatrixModM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod {}", self.row_strings().join("; "), self.modulus)
    }
}

/// `|GL_m(Z/2)| = 2^(m choose 2) * prod_{i=1..m} (2^i - 1)`; `None` on overflow.
pub fn gl2_order(m: u32) -> Option<u128> {
    let mut acc = 1u128.checked_shl(m * m.saturating_sub(1) / 2)?;
    for i in 1..=m {
        acc = acc.checked_mul(1u128.checked_shl(i)? - 1)?;
    }
    Some(acc)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Least `v` in `[1, p)` such that `P^v - I` has a nonzero first row.
///
/// `P` must be square mod 2 of exact order `p`.
pub fn cri_hypothesis(p_mat: &MatrixModM, p: u64) -> Result<Option<u64>> {
    if p_mat.modulus() != 2 || !p_mat.is_square() {
        return Err(Error::Domain("expected a square matrix mod 2".into()));
    }
    if !has_prime_order(p_mat, p)? {
        return Err(Error::Domain(format!("{p_mat:?} does not have order {p}")));
    }
    let id = MatrixModM::identity(p_mat.rows(), 2)?;
    let mut power = p_mat.clone();
    for v in 1..p {
        let diff = power.sub(&id)?;
        if (0..diff.cols()).any(|c| diff.get(0, c) != 0) {
            return Ok(Some(v));
        }
        power = power.mul(p_mat)?;
    }
    Ok(None)
}

/// Exact order `p` for prime `p`: `P != I` and `P^p = I`.
fn has_prime_order(mat: &MatrixModM, p: u64) -> Result<bool> {
    Ok(is_prime(p) && !mat.is_identity() && mat.pow(p)?.is_identity())
}

/// A matrix of exact order `p` found by [`search_gl2_order`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderHit {
    pub matrix: MatrixModM,
    pub order: u64,
    /// Least `v` satisfying the first-row hypothesis, if any.
    pub hypothesis_v: Option<u64>,
}

/// Up to `budget` elements of `GL_m(Z/2)` of exact order `p`, scanned in
/// lexicographic order of their row-major entries.
pub fn search_gl2_order(m: usize, p: u64, budget: usize) -> Result<Vec<OrderHit>> {
    if m == 0 || m > 11 {
        return Err(Error::Parameter(format!("dimension {m} outside 1..=11")));
    }
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not an odd prime")));
    }
    let group_order = gl2_order(m as u32).expect("m <= 11 fits");
    if !group_order.is_multiple_of(u128::from(p)) {
        return Err(Error::NoSolution(format!(
            "{p} does not divide |GL_{m}(Z/2)| = {group_order}"
        )));
    }
    let cells = m * m;
    let mut hits = Vec::new();
    let total: u128 = 1u128 << cells;
    let mut mask: u128 = 0;
    while mask < total && hits.len() < budget {
        let entries = (0..cells)
            .map(|i| ((mask >> (cells - 1 - i)) & 1) as i64)
            .collect();
        let cand = MatrixModM::new(m, m, 2, entries)?;
        if has_prime_order(&cand, p)? {
            let hypothesis_v = cri_hypothesis(&cand, p)?;
            hits.push(OrderHit {
                matrix: cand,
                order: p,
                hypothesis_v,
            });
        }
        mask += 1;
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_order(a: &MatrixModM) -> u64 {
        let mut x = a.clone();
        let mut e = 1;
        while !x.is_identity() {
            x = x.mul(a).unwrap();
            e += 1;
        }
        e
    }

    #[test]
    fn golden_matrix_has_order_three() {
        let p = MatrixModM::parse_binary_rows("01;11").unwrap();
        assert_eq!(p.order(p.default_order_cap()).unwrap(), MatrixOrder::Finite(3));
        assert_eq!(naive_order(&p), 3);
    }

    #[test]
    fn identity_has_order_one() {
        let id = MatrixModM::identity(4, 7).unwrap();
        assert_eq!(id.order(10).unwrap(), MatrixOrder::Finite(1));
    }

    #[test]
    fn sign_diagonal_has_order_two() {
        for p in [3, 5, 7, 11] {
            let e = MatrixModM::diagonal(&[1, -1], p).unwrap();
            assert_eq!(e.order(e.default_order_cap()).unwrap(), MatrixOrder::Finite(2));
        }
    }

    #[test]
    fn singular_matrix_exceeds_cap() {
        let z = MatrixModM::parse_binary_rows("10;00").unwrap();
        assert_eq!(z.order(8).unwrap(), MatrixOrder::Exceeded(8));
    }

    #[test]
    fn shape_errors() {
        let a = MatrixModM::identity(2, 2).unwrap();
        let b = MatrixModM::identity(3, 2).unwrap();
        let c = MatrixModM::identity(2, 3).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::Shape(_))));
        assert!(matches!(a.mul(&c), Err(Error::Shape(_))));
        assert!(MatrixModM::parse_binary_rows("01;1").is_err());
    }

    #[test]
    fn gl2_orders() {
        assert_eq!(gl2_order(1), Some(1));
        assert_eq!(gl2_order(2), Some(6));
        assert_eq!(gl2_order(3), Some(168));
        assert_eq!(gl2_order(4), Some(20160));
    }

    #[test]
    fn gl2_order_matches_enumeration_for_small_m() {
        for m in 1..=3usize {
            let cells = m * m;
            let invertible = (0u32..1 << cells)
                .filter(|mask| {
                    let entries = (0..cells).map(|i| ((mask >> i) & 1) as i64).collect();
                    let a = MatrixModM::new(m, m, 2, entries).unwrap();
                    matches!(a.order(a.default_order_cap()).unwrap(), MatrixOrder::Finite(_))
                })
                .count();
            assert_eq!(Some(invertible as u128), gl2_order(m as u32));
        }
    }

    #[test]
    fn search_examples() {
        let hits = search_gl2_order(2, 3, 10).unwrap();
        let golden = MatrixModM::parse_binary_rows("01;11").unwrap();
        assert_eq!(hits.len(), 2);
        assert_eq!(hits[0].matrix, golden);
        assert_eq!(hits[0].hypothesis_v, Some(1));

        let seven = MatrixModM::parse_binary_rows("001;110;010").unwrap();
        assert_eq!(naive_order(&seven), 7);
        let hits = search_gl2_order(3, 7, 100).unwrap();
        assert!(hits.iter().any(|h| h.matrix == seven));
        assert!(hits.iter().any(|h| h.hypothesis_v == Some(1)));

        assert!(matches!(search_gl2_order(2, 5, 10), Err(Error::NoSolution(_))));
    }

    #[test]
    fn cri_hypothesis_examples() {
        let p = MatrixModM::parse_binary_rows("01;11").unwrap();
        // P - I = [[1,1],[1,0]]
        assert_eq!(cri_hypothesis(&p, 3).unwrap(), Some(1));
        let id = MatrixModM::identity(2, 2).unwrap();
        assert!(matches!(cri_hypothesis(&id, 3), Err(Error::Domain(_))));
    }

    proptest! {
        #[test]
        fn pow_is_additive_in_the_exponent(
            entries in proptest::collection::vec(0i64..7, 9),
            e1 in 0u64..=32,
            e2 in 0u64..=32,
        ) {
            let a = MatrixModM::new(3, 3, 7, entries).unwrap();
            let lhs = a.pow(e1 + e2).unwrap();
            let rhs = a.pow(e1).unwrap().mul(&a.pow(e2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
