//! Partial Bell polynomials `B_{n,k}(z_1, ..., z_{n-k+1})` in exact integer
//! arithmetic.
//!
//! Three evaluation routes are provided:
//!
//! * [`bell_oracle`] sums over the multi-indices `α` with
//!   `α_1 + α_2 + ... = k` and `α_1 + 2α_2 + ... = n` (the definition).
//! * [`BellTable`] / [`bell_recurrence`] use the first-block recurrence
//!   `B_{n,k} = Σ_j C(n-1, j-1) z_j B_{n-j,k-1}` and memoize the whole
//!   triangle for a fixed argument vector.
//! * [`Identity`] evaluates closed forms for four special argument vectors.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{binom, factorial, sign};
use crate::{Error, Result};

/// Argument vector `(z_1, z_2, ...)` of a partial Bell polynomial.
///
/// Indexing is 1-based. Reading past the stored length is an error; there is
/// no implicit zero padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellArgs(Vec<BigInt>);

impl BellArgs {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::invalid("Bell argument vector must be nonempty"));
        }
        Ok(BellArgs(terms))
    }

    pub fn from_i64(terms: &[i64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    /// Builds `(g(1), g(2), ..., g(len))`.
    pub fn from_fn(len: usize, g: impl FnMut(usize) -> BigInt) -> Result<Self> {
        Self::new((1..=len).map(g).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `z_j` for `j >= 1`.
    pub fn z(&self, j: usize) -> Result<&BigInt> {
        if j == 0 {
            return Err(Error::invalid("Bell arguments are 1-indexed"));
        }
        self.0.get(j - 1).ok_or(Error::TooShort {
            index: j,
            len: self.0.len(),
        })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.0
    }

    /// Termwise product `a * z`.
    pub fn scaled(&self, a: &BigInt) -> Self {
        BellArgs(self.0.iter().map(|t| t * a).collect())
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

fn check_args(n: usize, k: usize, z: &BellArgs) -> Result<()> {
    check_nk(n, k)?;
    let needed = n - k + 1;
    if z.len() < needed {
        return Err(Error::TooShort {
            index: needed,
            len: z.len(),
        });
    }
    Ok(())
}

/// Partitions of `n` into exactly `k` positive parts, as multiplicity vectors
/// `mult[i-1] = α_i` of length `n - k + 1`.
pub fn multi_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, max_part: usize, mult: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(mult.clone());
            }
            return;
        }
        // remaining k parts, each in [1, max_part], summing to n
        if n < k || n > k * max_part {
            return;
        }
        for part in (1..=max_part.min(n - k + 1)).rev() {
            mult[part - 1] += 1;
            rec(n - part, k - 1, part, mult, out);
            mult[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let width = n - k + 1;
    let mut mult = vec![0; width];
    rec(n, k, width, &mut mult, &mut out);
    out
}

/// Number of set partitions of an `n`-set with block type `mult`, i.e.
/// `n! / Π (α_i! (i!)^{α_i})`, as a product of binomials.
fn set_partition_count(mult: &[usize]) -> BigUint {
    let mut remaining: i64 = mult
        .iter()
        .enumerate()
        .map(|(i, &a)| ((i + 1) * a) as i64)
        .sum();
    let mut coeff = BigInt::one();
    for (idx, &alpha) in mult.iter().enumerate() {
        if alpha == 0 {
            continue;
        }
        let size = (idx + 1) as i64;
        let span = size * alpha as i64;
        coeff *= binom(remaining, span);
        // split the chosen elements into alpha unordered blocks: each new block
        // holds the smallest element left plus size-1 others
        for t in 0..alpha as i64 {
            coeff *= binom(span - t * size - 1, size - 1);
        }
        remaining -= span;
    }
    coeff
        .to_biguint()
        .expect("binomial products are nonnegative")
}

/// `B_{n,k}(z)` by direct summation over the multi-indices of `π(n, k)`.
pub fn bell_oracle(n: usize, k: usize, z: &BellArgs) -> Result<BigInt> {
    check_args(n, k, z)?;
    let mut total = BigInt::zero();
    for mult in multi_indices(n, k) {
        let mut term = BigInt::from(set_partition_count(&mult));
        for (idx, &alpha) in mult.iter().enumerate() {
            if alpha > 0 {
                term *= num_traits::pow::pow(z.z(idx + 1)?.clone(), alpha);
            }
        }
        total += term;
    }
    Ok(total)
}

/// Memoized triangle `B_{n,k}(z)` for `0 <= k <= n <= n_max` and a fixed
/// argument vector.
///
/// Entries with `n - k + 1 > z.len()` depend on arguments that are not stored
/// and are reported as [`Error::TooShort`].
#[derive(Debug, Clone)]
pub struct BellTable {
    z: BellArgs,
    rows: Vec<Vec<BigInt>>,
}

impl BellTable {
    pub fn new(z: BellArgs, n_max: usize) -> Self {
        let len = z.len();
        let pascal = pascal_rows(n_max);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n + 1];
            for (k, cell) in row.iter_mut().enumerate().skip(1) {
                if n - k + 1 > len {
                    continue;
                }
                let mut acc = BigInt::zero();
                for j in 1..=n - k + 1 {
                    let zj = &z.0[j - 1];
                    if zj.is_zero() {
                        continue;
                    }
                    let prev = &rows[n - j][k - 1];
                    if prev.is_zero() {
                        continue;
                    }
                    acc += &pascal[n - 1][j - 1] * zj * prev;
                }
                *cell = acc;
            }
            rows.push(row);
        }
        BellTable { z, rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn args(&self) -> &BellArgs {
        &self.z
    }

    /// `B_{n,k}`, including the conventions `B_{0,0} = 1` and `B_{n,0} = 0`
    /// for `n > 0`.
    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        if n > self.n_max() {
            return Err(Error::invalid(format!(
                "n={n} beyond table size {}",
                self.n_max()
            )));
        }
        if k > n {
            return Err(Error::invalid(format!("k={k} exceeds n={n}")));
        }
        if k > 0 && n - k + 1 > self.z.len() {
            return Err(Error::TooShort {
                index: n - k + 1,
                len: self.z.len(),
            });
        }
        Ok(&self.rows[n][k])
    }
}

fn pascal_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for a in 0..=n_max {
        let mut row = vec![BigInt::one(); a + 1];
        for b in 1..a {
            row[b] = &rows[a - 1][b - 1] + &rows[a - 1][b];
        }
        rows.push(row);
    }
    rows
}

/// `B_{n,k}(z)` via the recurrence table.
pub fn bell_recurrence(n: usize, k: usize, z: &BellArgs) -> Result<BigInt> {
    check_args(n, k, z)?;
    BellTable::new(z.clone(), n).get(n, k).cloned()
}

/// Special argument vectors with closed-form Bell values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `(1!, 2!, ..., ℓ!, 0, 0, ...)`
    TruncatedFactorials { ell: usize },
    /// `(1!, 0, ..., 0, (ℓ+1)!, 0, ...)`, `ℓ >= 2`
    Sparse { ell: usize },
    /// `(1!, ..., ℓ!, 0, (ℓ+2)!, (ℓ+3)!, ...)`
    Gap { ell: usize },
    /// `z_j = j! C(j+r, r+1)`
    Figurate { r: usize },
}

impl Identity {
    /// Numbered as in the usual catalog: 1 truncated, 2 sparse, 3 gap,
    /// 4 figurate.
    pub fn from_number(number: u32, ell: Option<usize>, r: Option<usize>) -> Result<Self> {
        let need_ell = || ell.ok_or_else(|| Error::invalid(format!("identity {number} needs ell")));
        match number {
            1 => Ok(Identity::TruncatedFactorials { ell: need_ell()? }),
            2 => Ok(Identity::Sparse { ell: need_ell()? }),
            3 => Ok(Identity::Gap { ell: need_ell()? }),
            4 => Ok(Identity::Figurate {
                r: r.ok_or_else(|| Error::invalid("identity 4 needs r"))?,
            }),
            _ => Err(Error::invalid(format!("no identity numbered {number}"))),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Identity::TruncatedFactorials { ell } | Identity::Gap { ell } if ell == 0 => {
                Err(Error::invalid("ell must be >= 1"))
            }
            Identity::Sparse { ell } if ell < 2 => {
                Err(Error::invalid("sparse identity needs ell >= 2"))
            }
            _ => Ok(()),
        }
    }

    /// `z_j` for this argument vector.
    pub fn z(&self, j: usize) -> BigInt {
        let fact = || BigInt::from(factorial(j as u64));
        match *self {
            Identity::TruncatedFactorials { ell } if j <= ell => fact(),
            Identity::TruncatedFactorials { .. } => BigInt::zero(),
            Identity::Sparse { ell } if j == 1 || j == ell + 1 => fact(),
            Identity::Sparse { .. } => BigInt::zero(),
            Identity::Gap { ell } if j == ell + 1 => BigInt::zero(),
            Identity::Gap { .. } => fact(),
            Identity::Figurate { r } => fact() * binom((j + r) as i64, (r + 1) as i64),
        }
    }

    pub fn args(&self, len: usize) -> Result<BellArgs> {
        BellArgs::from_fn(len, |j| self.z(j))
    }

    /// Closed-form value of `B_{n,k}` on this argument vector.
    pub fn closed_form(&self, n: usize, k: usize) -> Result<BigInt> {
        check_nk(n, k)?;
        self.validate()?;
        match *self {
            Identity::TruncatedFactorials { ell } => Ok(identity1_truncated_factorials(n, k, ell)),
            Identity::Sparse { ell } => Ok(identity2_sparse(n, k, ell)),
            Identity::Gap { ell } => Ok(identity3_gap(n, k, ell)),
            Identity::Figurate { r } => Ok(identity4_figurate(n, k, r)),
        }
    }
}

fn n_over_k_factorial(n: usize, k: usize) -> BigInt {
    BigInt::from(factorial(n as u64) / factorial(k as u64))
}

/// `B_{n,k}(1!, ..., ℓ!, 0, ...) = (n!/k!) Σ_j (-1)^j C(k,j) C(n-ℓj-1, k-1)`.
fn identity1_truncated_factorials(n: usize, k: usize, ell: usize) -> BigInt {
    let (n_, k_, l_) = (n as i64, k as i64, ell as i64);
    let sum: BigInt = (0..=(n - k) / ell)
        .map(|j| {
            let j_ = j as i64;
            sign(j as u64) * binom(k_, j_) * binom(n_ - l_ * j_ - 1, k_ - 1)
        })
        .sum();
    n_over_k_factorial(n, k) * sum
}

/// `B_{n,k}(1!, 0, ..., (ℓ+1)!, 0, ...)`; zero unless `ℓ | n-k`.
fn identity2_sparse(n: usize, k: usize, ell: usize) -> BigInt {
    if !(n - k).is_multiple_of(ell) {
        return BigInt::zero();
    }
    let d = (n - k) / ell;
    let top = n - k + d;
    binom(n as i64, top as i64) * BigInt::from(factorial(top as u64) / factorial(d as u64))
}

/// `B_{n,k}(1!, ..., ℓ!, 0, (ℓ+2)!, ...)` with the Kronecker-delta correction.
fn identity3_gap(n: usize, k: usize, ell: usize) -> BigInt {
    let (n_, k_, step) = (n as i64, k as i64, ell as i64 + 1);
    let mut sum: BigInt = (0..k_)
        .map(|kappa| {
            sign(kappa as u64) * binom(k_, kappa) * binom(n_ - step * kappa - 1, k_ - kappa - 1)
        })
        .sum();
    if n_ == step * k_ {
        sum += sign(k as u64);
    }
    n_over_k_factorial(n, k) * sum
}

/// `B_{n,k}(1! t_1(r), 2! t_2(r), ...) = (n!/k!) C(n+(r+1)k-1, n-k)` with
/// `t_j(r) = C(j+r, r+1)`.
fn identity4_figurate(n: usize, k: usize, r: usize) -> BigInt {
    let (n_, k_, r_) = (n as i64, k as i64, r as i64);
    n_over_k_factorial(n, k) * binom(n_ + (r_ + 1) * k_ - 1, n_ - k_)
}

/// Identity 1 as a free function with argument checks.
pub fn identity1(n: usize, k: usize, ell: usize) -> Result<BigInt> {
    Identity::TruncatedFactorials { ell }.closed_form(n, k)
}

pub fn identity2(n: usize, k: usize, ell: usize) -> Result<BigInt> {
    Identity::Sparse { ell }.closed_form(n, k)
}

pub fn identity3(n: usize, k: usize, ell: usize) -> Result<BigInt> {
    Identity::Gap { ell }.closed_form(n, k)
}

pub fn identity4(n: usize, k: usize, r: usize) -> Result<BigInt> {
    Identity::Figurate { r }.closed_form(n, k)
}
