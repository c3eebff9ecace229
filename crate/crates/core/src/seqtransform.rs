//! Truncated integer sequences and the invert transform.
//!
//! For `X(t) = Σ x_n t^n` the invert transform `Y` satisfies
//! `1 + Y = 1 / (1 - X)`, and its `m`-th iterate has generating function
//! `X / (1 - mX)`. Terms are computed either by the coefficient recurrence
//! ([`invert`], [`invert_m`]) or from partial Bell polynomials
//! ([`invert_m_via_bell`]).

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::bellpoly::{BellArgs, BellTable};
use crate::{Error, Result};

/// Prefix `(x_1, ..., x_N)` of an integer sequence, `N >= 1`.
///
/// A value at index 0 is never stored. Consumers that need `x_0 = 1` apply
/// that convention themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seq(Vec<BigInt>);

impl Seq {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::invalid("sequence prefix must be nonempty"));
        }
        Ok(Seq(terms))
    }

    pub fn from_i64(terms: &[i64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn from_fn(len: usize, g: impl FnMut(usize) -> BigInt) -> Result<Self> {
        Self::new((1..=len).map(g).collect())
    }

    /// Truncation order `N`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.0.get(i))
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.0
    }

    pub fn scaled(&self, a: &BigInt) -> Seq {
        Seq(self.0.iter().map(|t| t * a).collect())
    }

    /// Exact termwise division; `None` if some term is not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<Seq> {
        self.0
            .iter()
            .map(|t| {
                let (q, r) = t.div_rem(d);
                r.is_zero().then_some(q)
            })
            .collect::<Option<Vec<_>>>()
            .map(Seq)
    }
}

impl Index<usize> for Seq {
    type Output = BigInt;

    /// 1-based indexing.
    fn index(&self, n: usize) -> &BigInt {
        &self.0[n - 1]
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Coefficients of `X / (1 - mX)` for `m >= 1` (shared recurrence).
fn x_over_one_minus_mx(x: &Seq, m: &BigInt) -> Seq {
    let n_max = x.len();
    let mut y: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let conv: BigInt = (1..n).map(|j| &x.0[j - 1] * &y[n - j - 1]).sum();
        y.push(&x.0[n - 1] + m * conv);
    }
    Seq(y)
}

/// Invert transform: `y_n = x_n + Σ_{j=1}^{n-1} x_j y_{n-j}`.
pub fn invert(x: &Seq) -> Seq {
    x_over_one_minus_mx(x, &BigInt::one())
}

/// `m`-th iterate of the invert transform; `m = 0` is the identity.
pub fn invert_m(x: &Seq, m: i64) -> Result<Seq> {
    match m {
        m if m < 0 => Err(Error::invalid(format!(
            "invert_m needs m >= 0, got {m}; use invert_inverse for the inverse"
        ))),
        0 => Ok(x.clone()),
        m => Ok(x_over_one_minus_mx(x, &BigInt::from(m))),
    }
}

/// Block-count refinement of the `m`-th invert transform.
///
/// `term(n, k) = (k!/n!) m^{k-1} B_{n,k}(1!x_1, 2!x_2, ...)`; summing over
/// `k` gives the `n`-th term of `invert_m(x, m)`.
#[derive(Debug, Clone)]
pub struct BellTerms {
    /// `rows[n-1][k-1]` holds `term(n, k)`.
    rows: Vec<Vec<BigInt>>,
}

impl BellTerms {
    pub fn new(x: &Seq, m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::invalid(format!("Bell route needs m >= 1, got {m}")));
        }
        let n_max = x.len();
        let z = BellArgs::new(
            x.0.iter()
                .enumerate()
                .map(|(i, t)| BigInt::from(factorial(i as u64 + 1)) * t)
                .collect(),
        )?;
        let table = BellTable::new(z, n_max);
        let m = BigInt::from(m);
        let mut rows = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let n_fact = BigInt::from(factorial(n as u64));
            let mut m_pow = BigInt::one();
            let mut row = Vec::with_capacity(n);
            for k in 1..=n {
                let k_fact = BigInt::from(factorial(k as u64));
                let num = &k_fact * &m_pow * table.get(n, k)?;
                let (q, r) = num.div_rem(&n_fact);
                debug_assert!(r.is_zero(), "k!/n! B_(n,k) not integral at n={n}, k={k}");
                if !r.is_zero() {
                    return Err(Error::invalid(format!(
                        "non-integral Bell term at n={n}, k={k}"
                    )));
                }
                row.push(q);
                m_pow *= &m;
            }
            rows.push(row);
        }
        Ok(BellTerms { rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `(k!/n!) m^{k-1} B_{n,k}(...)`; zero outside `1 <= k <= n`.
    pub fn term(&self, n: usize, k: usize) -> BigInt {
        if n == 0 || k == 0 || k > n {
            return BigInt::zero();
        }
        self.rows[n - 1][k - 1].clone()
    }

    /// All block-count terms for index `n`, `k = 1..=n`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn totals(&self) -> Seq {
        Seq(self.rows.iter().map(|r| r.iter().sum()).collect())
    }
}

/// `y_n = Σ_k (k!/n!) m^{k-1} B_{n,k}(1!x_1, 2!x_2, ...)`.
pub fn invert_m_via_bell(x: &Seq, m: i64) -> Result<Seq> {
    Ok(BellTerms::new(x, m)?.totals())
}

/// Inverse of [`invert`]: `x_n = y_n - Σ_{j=1}^{n-1} x_j y_{n-j}`.
pub fn invert_inverse(y: &Seq) -> Seq {
    let mut x: Vec<BigInt> = Vec::with_capacity(y.len());
    for n in 1..=y.len() {
        let conv: BigInt = (1..n).map(|j| &x[j - 1] * &y.0[n - j - 1]).sum();
        x.push(&y.0[n - 1] - conv);
    }
    Seq(x)
}
