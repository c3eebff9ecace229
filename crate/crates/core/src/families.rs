//! Catalog of restriction families.
//!
//! Every [`Family`] bundles its admissible block counts `f0`, the block
//! system realizing them, a word predicate over the full alphabet and a
//! closed-form counter. The closed form takes the family's public index `n`;
//! [`Family::transform_index`] maps it to the index of the `m`-th invert
//! transform `f_m` and [`Family::word_length`] to the length of the counted
//! words. The two differ by [`Family::offset`], which is not uniform across
//! the catalog.

use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binom, coeff_pow, pow, sign};
use crate::seqtransform::{invert_m, BellTerms, Seq};
use crate::wordmodel::{
    brute_count, enumerate_blockwords_by_blocks, BlockSystem, Selector, WordPredicate,
};
use crate::{Error, Result};

/// Zero runs of a binary-type word: maximal runs of the letter 0.
fn zero_runs(word: &[u8]) -> impl Iterator<Item = usize> + '_ {
    word.split(|&a| a != 0).map(<[u8]>::len).filter(|&l| l > 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Words over `{0..m}` with no `ℓ` consecutive zeros.
    BoundedZeroRuns { ell: usize },
    /// Words over `{0..m}` whose zero runs all have even length.
    OddZeroRuns,
    /// Words over `{0..m}` with at least `ℓ` zeros between any two nonzero
    /// letters.
    MinGap { ell: usize },
    /// Words over `{0..m}` starting with 1 where every nonzero letter is
    /// followed by at least `ℓ` zeros (the unshifted block words).
    MinGapBlocks { ell: usize },
    /// Words over `{0..m}` whose zero runs all have length exactly `ℓ`.
    ZeroBlocksExactly { ell: usize },
    /// Words over `{0..m}` with no zero run of length exactly `ℓ`.
    NoExactRun { ell: usize },
    /// Words over `{0..m+r+1}` avoiding every factor `a₁a₂` with
    /// `a₁ < a₂ <= r+1`.
    AscentAvoiding { r: usize },
    /// Words over `{0..q+m-1}` avoiding the factor `ii` for every `i < q`.
    IiAvoiding { q: usize },
}

/// Family names accepted by [`Family::from_name`].
pub const FAMILY_NAMES: &[&str] = &[
    "bounded-zero-runs",
    "odd-zero-runs",
    "min-gap",
    "min-gap-blocks",
    "zero-blocks-exactly",
    "no-exact-run",
    "ascent-avoiding",
    "01-avoiding",
    "01-02-12-avoiding",
    "ii-avoiding",
];

/// Optional integer parameters supplied by name.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub ell: Option<usize>,
    pub r: Option<usize>,
    pub q: Option<usize>,
}

/// A validated restriction family.
#[derive(Clone)]
pub struct Family {
    kind: FamilyKind,
    system: BlockSystem,
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family({})", self.label())
    }
}

impl Family {
    pub fn new(kind: FamilyKind) -> Result<Self> {
        use FamilyKind::*;
        match kind {
            BoundedZeroRuns { ell: 0 }
            | MinGap { ell: 0 }
            | MinGapBlocks { ell: 0 }
            | NoExactRun { ell: 0 } => return Err(Error::invalid("ell must be >= 1")),
            ZeroBlocksExactly { ell } if ell < 2 => {
                return Err(Error::invalid("zero-blocks-exactly needs ell >= 2"))
            }
            IiAvoiding { q: 0 } => return Err(Error::invalid("ii-avoiding needs q >= 1")),
            _ => {}
        }
        let b = match kind {
            AscentAvoiding { r } => r + 2,
            IiAvoiding { q } => q,
            _ => 1,
        };
        let b = u8::try_from(b)
            .ok()
            .filter(|&b| b < 64)
            .ok_or_else(|| Error::invalid("block head letter too large"))?;
        let selector = match kind {
            AscentAvoiding { .. } => Selector::NonIncreasing,
            IiAvoiding { q } => {
                let q = q as u8;
                Selector::Predicate(Arc::new(move |w: &[u8]| {
                    !w.windows(2).any(|p| p[0] == p[1] && p[0] < q)
                }))
            }
            _ => Selector::Lex,
        };
        let system = BlockSystem::new(b, move |j| f0_value(kind, j), selector)?;
        system.validate(48)?;
        Ok(Family { kind, system })
    }

    pub fn from_name(name: &str, params: FamilyParams) -> Result<Self> {
        let need = |v: Option<usize>, p: &str| {
            v.ok_or_else(|| Error::invalid(format!("family {name} needs --{p}")))
        };
        let kind = match name {
            "bounded-zero-runs" => FamilyKind::BoundedZeroRuns {
                ell: need(params.ell, "ell")?,
            },
            "odd-zero-runs" => FamilyKind::OddZeroRuns,
            "min-gap" => FamilyKind::MinGap {
                ell: need(params.ell, "ell")?,
            },
            "min-gap-blocks" => FamilyKind::MinGapBlocks {
                ell: need(params.ell, "ell")?,
            },
            "zero-blocks-exactly" => FamilyKind::ZeroBlocksExactly {
                ell: need(params.ell, "ell")?,
            },
            "no-exact-run" => FamilyKind::NoExactRun {
                ell: need(params.ell, "ell")?,
            },
            "ascent-avoiding" => FamilyKind::AscentAvoiding {
                r: need(params.r, "r")?,
            },
            "01-avoiding" => FamilyKind::AscentAvoiding { r: 0 },
            "01-02-12-avoiding" => FamilyKind::AscentAvoiding { r: 1 },
            "ii-avoiding" => FamilyKind::IiAvoiding {
                q: need(params.q, "q")?,
            },
            other => {
                return Err(Error::invalid(format!(
                    "unknown family {other:?}; known: {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        Family::new(kind)
    }

    /// One representative of every family shape, with the given parameter.
    pub fn catalog(param: usize) -> Result<Vec<Family>> {
        use FamilyKind::*;
        [
            BoundedZeroRuns { ell: param },
            OddZeroRuns,
            MinGap { ell: param },
            MinGapBlocks { ell: param },
            ZeroBlocksExactly { ell: param.max(2) },
            NoExactRun { ell: param },
            AscentAvoiding { r: param - 1 },
            IiAvoiding { q: param },
        ]
        .into_iter()
        .map(Family::new)
        .collect()
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            FamilyKind::BoundedZeroRuns { .. } => "bounded-zero-runs",
            FamilyKind::OddZeroRuns => "odd-zero-runs",
            FamilyKind::MinGap { .. } => "min-gap",
            FamilyKind::MinGapBlocks { .. } => "min-gap-blocks",
            FamilyKind::ZeroBlocksExactly { .. } => "zero-blocks-exactly",
            FamilyKind::NoExactRun { .. } => "no-exact-run",
            FamilyKind::AscentAvoiding { .. } => "ascent-avoiding",
            FamilyKind::IiAvoiding { .. } => "ii-avoiding",
        }
    }

    /// Name with parameters, e.g. `min-gap(ell=2)`.
    pub fn label(&self) -> String {
        use FamilyKind::*;
        match self.kind {
            BoundedZeroRuns { ell }
            | MinGap { ell }
            | MinGapBlocks { ell }
            | ZeroBlocksExactly { ell }
            | NoExactRun { ell } => format!("{}(ell={ell})", self.name()),
            OddZeroRuns => self.name().to_string(),
            AscentAvoiding { r } => format!("{}(r={r})", self.name()),
            IiAvoiding { q } => format!("{}(q={q})", self.name()),
        }
    }

    pub fn block_system(&self) -> &BlockSystem {
        &self.system
    }

    pub fn b(&self) -> u8 {
        self.system.b()
    }

    pub fn f0(&self, j: usize) -> BigUint {
        f0_value(self.kind, j)
    }

    /// `(f0(1), ..., f0(len))`.
    pub fn f0_prefix(&self, len: usize) -> Seq {
        Seq::from_fn(len.max(1), |j| BigInt::from(self.f0(j))).expect("nonempty")
    }

    /// Smallest public index with a word interpretation.
    pub fn min_n(&self) -> usize {
        match self.kind {
            FamilyKind::AscentAvoiding { .. } | FamilyKind::MinGapBlocks { .. } => 1,
            _ => 0,
        }
    }

    /// `f_m` index minus word length.
    pub fn offset(&self) -> usize {
        match self.kind {
            FamilyKind::MinGap { ell } => 2 * ell + 1,
            FamilyKind::MinGapBlocks { .. } => 0,
            _ => 1,
        }
    }

    /// Index into `f_m` for public index `n`.
    pub fn transform_index(&self, n: usize) -> usize {
        match self.kind {
            FamilyKind::AscentAvoiding { .. } | FamilyKind::MinGapBlocks { .. } => n,
            _ => n + self.offset(),
        }
    }

    /// Length of the words counted at public index `n`.
    pub fn word_length(&self, n: usize) -> usize {
        self.transform_index(n) - self.offset()
    }

    /// Letters of the counted words are `0..alphabet_size(m)`.
    pub fn alphabet_size(&self, m: u32) -> usize {
        match self.kind {
            FamilyKind::AscentAvoiding { r } => m as usize + r + 2,
            FamilyKind::IiAvoiding { q } => q + m as usize,
            _ => m as usize + 1,
        }
    }

    /// Restriction over the full alphabet, for brute-force counting.
    pub fn predicate(&self) -> FamilyPredicate {
        FamilyPredicate(self.kind)
    }

    /// Closed-form count at public index `n`.
    pub fn closed_form(&self, m: u32, n: usize) -> BigInt {
        closed_form(self.kind, m, n)
    }

    /// `f_m(0..=idx_max)` by the generating-function recurrence, with the
    /// convention `f_m(0) = 1` at position 0.
    pub fn transform_terms(&self, m: u32, idx_max: usize) -> Result<Vec<BigInt>> {
        let f = invert_m(&self.f0_prefix(idx_max), m as i64)?;
        let mut out = vec![BigInt::one()];
        out.extend(f.into_terms().into_iter().take(idx_max));
        Ok(out)
    }

    /// Largest `n <= n_cap` whose brute-force search stays within `limit`
    /// candidate words (`alphabet^length <= limit`). `None` if even
    /// [`Family::min_n`] is out of reach.
    pub fn max_n_within(&self, m: u32, limit: u64, n_cap: usize) -> Option<usize> {
        let a = BigUint::from(self.alphabet_size(m));
        let limit = BigUint::from(limit);
        (self.min_n()..=n_cap)
            .take_while(|&n| num_traits::pow::pow(a.clone(), self.word_length(n)) <= limit)
            .last()
    }

    /// Word counts for every public index in `ns`, via the transform.
    pub fn counts(&self, m: u32, ns: RangeInclusive<usize>) -> Result<Vec<(usize, BigInt)>> {
        if *ns.start() < self.min_n() {
            return Err(Error::invalid(format!(
                "{} is defined for n >= {}",
                self.label(),
                self.min_n()
            )));
        }
        if ns.is_empty() {
            return Ok(Vec::new());
        }
        let terms = self.transform_terms(m, self.transform_index(*ns.end()))?;
        Ok(ns
            .map(|n| (n, terms[self.transform_index(n)].clone()))
            .collect())
    }
}

fn f0_value(kind: FamilyKind, j: usize) -> BigUint {
    use FamilyKind::*;
    let bit = |b: bool| BigUint::from(b as u8);
    match kind {
        BoundedZeroRuns { ell } => bit(j <= ell),
        OddZeroRuns => bit(j % 2 == 1),
        MinGap { ell } | MinGapBlocks { ell } => bit(j > ell),
        ZeroBlocksExactly { ell } => bit(j == 1 || j == ell + 1),
        NoExactRun { ell } => bit(j != ell + 1),
        AscentAvoiding { r } => binom((j + r) as i64, (r + 1) as i64)
            .to_biguint()
            .expect("binomials are nonnegative"),
        IiAvoiding { .. } if j == 1 => BigUint::one(),
        IiAvoiding { q } => BigUint::from(q) * num_traits::pow::pow(BigUint::from(q - 1), j - 2),
    }
}

/// Word-level restriction of a family.
#[derive(Debug, Clone, Copy)]
pub struct FamilyPredicate(FamilyKind);

impl WordPredicate for FamilyPredicate {
    fn accepts(&self, w: &[u8]) -> bool {
        use FamilyKind::*;
        match self.0 {
            BoundedZeroRuns { ell } => zero_runs(w).all(|l| l < ell),
            OddZeroRuns => zero_runs(w).all(|l| l % 2 == 0),
            MinGap { ell } => {
                let mut last: Option<usize> = None;
                for (i, &a) in w.iter().enumerate() {
                    if a != 0 {
                        if matches!(last, Some(p) if i - p <= ell) {
                            return false;
                        }
                        last = Some(i);
                    }
                }
                true
            }
            MinGapBlocks { ell } => {
                w.first() == Some(&1)
                    && w.iter().enumerate().all(|(i, &a)| {
                        a == 0 || (i + ell < w.len() && w[i + 1..=i + ell].iter().all(|&z| z == 0))
                    })
            }
            ZeroBlocksExactly { ell } => zero_runs(w).all(|l| l == ell),
            NoExactRun { ell } => zero_runs(w).all(|l| l != ell),
            AscentAvoiding { r } => !w.windows(2).any(|p| p[0] < p[1] && p[1] as usize <= r + 1),
            IiAvoiding { q } => !w.windows(2).any(|p| p[0] == p[1] && (p[0] as usize) < q),
        }
    }

    fn prefix_closed(&self) -> bool {
        matches!(
            self.0,
            FamilyKind::BoundedZeroRuns { .. }
                | FamilyKind::MinGap { .. }
                | FamilyKind::AscentAvoiding { .. }
                | FamilyKind::IiAvoiding { .. }
        )
    }
}

fn closed_form(kind: FamilyKind, m: u32, n: usize) -> BigInt {
    use FamilyKind::*;
    let mm = m as i64;
    let n_ = n as i64;
    let mpow = |e: i64| pow(mm, e as u64);
    match kind {
        BoundedZeroRuns { ell } => {
            // f_m(n+1) = Σ_k Σ_j (-1)^j C(k,j) C(n-ℓj, k-1) m^{k-1}
            let l = ell as i64;
            let big_n = n_ + 1;
            (1..=big_n)
                .map(|k| {
                    let inner: BigInt = (0..=(big_n - k) / l)
                        .map(|j| sign(j as u64) * binom(k, j) * binom(n_ - l * j, k - 1))
                        .sum();
                    inner * mpow(k - 1)
                })
                .sum()
        }
        OddZeroRuns => (0..=n_ / 2)
            .map(|k| binom(n_ - k, k) * mpow(n_ - 2 * k))
            .sum(),
        MinGap { ell } => {
            // f_m(n+2ℓ+1) = Σ_{k=1}^{⌊(n+2ℓ)/ℓ⌋} C(n-ℓ(k-2), k-1) m^{k-1}
            let l = ell as i64;
            (1..=(n_ + 2 * l) / l)
                .map(|k| binom(n_ - l * (k - 2), k - 1) * mpow(k - 1))
                .sum()
        }
        MinGapBlocks { ell } => {
            // f_m(n) = Σ_{k=1}^{⌊(n-1)/ℓ⌋} C(n-ℓk-1, k-1) m^{k-1}; empty at n = 0
            let l = ell as i64;
            if n == 0 {
                return BigInt::zero();
            }
            (1..=(n_ - 1) / l)
                .map(|k| binom(n_ - l * k - 1, k - 1) * mpow(k - 1))
                .sum()
        }
        ZeroBlocksExactly { ell } => {
            // f_m(n+1) = Σ_i C(n+1-ℓi, i) m^{n-ℓi}
            let l = ell as i64;
            (0..=(n_ + 1) / l)
                .map(|i| coeff_pow(binom(n_ + 1 - l * i, i), mm, n_ - l * i))
                .sum()
        }
        NoExactRun { ell } => {
            // f_m(n+1) = Σ_k (Σ_{κ<k} (-1)^κ C(k,κ) C(n-(ℓ+1)κ, k-κ-1)
            //                 + (-1)^k δ_{n+1,(ℓ+1)k}) m^{k-1}
            let step = ell as i64 + 1;
            (1..=n_ + 1)
                .map(|k| {
                    let mut inner: BigInt = (0..k)
                        .map(|kappa| {
                            sign(kappa as u64)
                                * binom(k, kappa)
                                * binom(n_ - step * kappa, k - kappa - 1)
                        })
                        .sum();
                    if n_ + 1 == step * k {
                        inner += sign(k as u64);
                    }
                    inner * mpow(k - 1)
                })
                .sum()
        }
        AscentAvoiding { r } => {
            // f_m(n) = Σ_{k=1}^n C(n+(r+1)k-1, n-k) m^{k-1}
            let r1 = r as i64 + 1;
            (1..=n_)
                .map(|k| binom(n_ + r1 * k - 1, n_ - k) * mpow(k - 1))
                .sum()
        }
        IiAvoiding { q } => {
            // f_m(n+1) = m^n + Σ_{k=1}^n Σ_{ℓ<k} C(k,ℓ) C(n-k, k-ℓ-1)
            //                    q^{k-ℓ} (q-1)^{n+1+ℓ-2k} m^{k-1}
            let q_ = q as i64;
            let mut total = mpow(n_);
            for k in 1..=n_ {
                for l in 0..k {
                    let c = binom(k, l) * binom(n_ - k, k - l - 1);
                    let c = coeff_pow(c, q_, k - l);
                    let c = coeff_pow(c, q_ - 1, n_ + 1 + l - 2 * k);
                    total += c * mpow(k - 1);
                }
            }
            total
        }
    }
}

/// `g(n, x) = Σ_{k=0}^n C(n+k+1, n-k) x^k`.
pub fn chebyshev_g(n: usize, x: i64) -> BigInt {
    let n_ = n as i64;
    (0..=n_)
        .map(|k| binom(n_ + k + 1, n_ - k) * pow(x, k as u64))
        .sum()
}

/// Checks that `g(n, x)` follows the second-kind Chebyshev recurrence in the
/// shifted argument `(x+2)/2`: `g(0) = 1`, `g(1) = x+2` and
/// `g(n+1) = (x+2) g(n) - g(n-1)` for `1 <= n < n_max`.
pub fn chebyshev_identity_check(n_max: usize, x_values: &[i64]) -> bool {
    x_values.iter().all(|&x| {
        let shift = BigInt::from(x + 2);
        let g: Vec<BigInt> = (0..=n_max).map(|n| chebyshev_g(n, x)).collect();
        g[0].is_one()
            && (n_max < 1 || g[1] == shift)
            && (1..n_max).all(|n| g[n + 1] == &shift * &g[n] - &g[n - 1])
    })
}

/// One of the independent counting routes compared by [`cross_verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ClosedForm,
    Bell,
    Transform,
    BruteForce,
    BlockEnumeration,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ClosedForm => "closed-form",
            Route::Bell => "bell",
            Route::Transform => "transform",
            Route::BruteForce => "brute-force",
            Route::BlockEnumeration => "block-enumeration",
        })
    }
}

/// Results for one `(m, n)` cell.
#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub m: u32,
    pub n: usize,
    #[serde(serialize_with = "ser_values")]
    pub values: Vec<(Route, BigInt)>,
    /// First block count `k` whose enumerated words disagree with the Bell
    /// term: `(k, enumerated, bell)`.
    #[serde(serialize_with = "ser_refinement")]
    pub refinement_mismatch: Option<(usize, BigInt, BigInt)>,
}

fn ser_values<S: serde::Serializer>(
    v: &[(Route, BigInt)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(v.len()))?;
    for (route, value) in v {
        map.serialize_entry(&route.to_string(), &value.to_string())?;
    }
    map.end()
}

fn ser_refinement<S: serde::Serializer>(
    v: &Option<(usize, BigInt, BigInt)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some((k, got, want)) => s.collect_seq([k.to_string(), got.to_string(), want.to_string()]),
    }
}

impl CellReport {
    pub fn consistent(&self) -> bool {
        self.refinement_mismatch.is_none() && self.values.windows(2).all(|p| p[0].1 == p[1].1)
    }

    pub fn value(&self, route: Route) -> Option<&BigInt> {
        self.values
            .iter()
            .find(|(r, _)| *r == route)
            .map(|(_, v)| v)
    }
}

/// Outcome of [`cross_verify`], cells ordered by `(m, n)`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub cells: Vec<CellReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(CellReport::consistent)
    }

    /// Smallest `(m, n)` whose routes disagree.
    pub fn first_counterexample(&self) -> Option<&CellReport> {
        self.cells.iter().find(|c| !c.consistent())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ms, ns) = (
            self.cells.iter().map(|c| c.m),
            self.cells.iter().map(|c| c.n),
        );
        let span = |it: &mut dyn Iterator<Item = usize>| {
            let v: Vec<usize> = it.collect();
            match (v.iter().min(), v.iter().max()) {
                (Some(a), Some(b)) => format!("{a}..{b}"),
                _ => "-".into(),
            }
        };
        let m_span = span(&mut ms.map(|m| m as usize));
        let n_span = span(&mut ns.into_iter());
        match self.first_counterexample() {
            None => write!(
                f,
                "{}: m={m_span} n={n_span}: {} cells, all routes agree",
                self.family,
                self.cells.len()
            ),
            Some(cell) => {
                write!(
                    f,
                    "{}: MISMATCH at m={}, n={}:",
                    self.family, cell.m, cell.n
                )?;
                for (route, value) in &cell.values {
                    write!(f, " {route}={value}")?;
                }
                if let Some((k, got, want)) = &cell.refinement_mismatch {
                    write!(f, " (k={k}: {got} words, Bell term {want})")?;
                }
                Ok(())
            }
        }
    }
}

/// Compares the family's closed form, the Bell and transform routes, brute
/// force over the predicate and block enumeration (including the per-block
/// count refinement) on every cell of `ms × ns`.
pub fn cross_verify(
    family: &Family,
    ms: RangeInclusive<u32>,
    ns: RangeInclusive<usize>,
    budget: u64,
) -> Result<VerifyReport> {
    cross_verify_with(family, ms, ns, budget, &|m, n| family.closed_form(m, n))
}

/// Runs [`cross_verify`] separately for every `m`, each over
/// `min_n..=N(m)` where `N(m) <= n_cap` is the largest index whose brute-force
/// search visits at most `limit` words.
pub fn cross_verify_reduced(
    family: &Family,
    ms: RangeInclusive<u32>,
    n_cap: usize,
    limit: u64,
) -> Result<Vec<VerifyReport>> {
    ms.map(|m| {
        let hi = family.max_n_within(m, limit, n_cap).ok_or_else(|| {
            Error::invalid(format!(
                "{}: no index fits the limit at m={m}",
                family.label()
            ))
        })?;
        cross_verify(family, m..=m, family.min_n()..=hi, limit)
    })
    .collect()
}

/// [`cross_verify`] with a substitute closed form.
pub fn cross_verify_with(
    family: &Family,
    ms: RangeInclusive<u32>,
    ns: RangeInclusive<usize>,
    budget: u64,
    closed: &(dyn Fn(u32, usize) -> BigInt + Sync),
) -> Result<VerifyReport> {
    if *ms.start() == 0 {
        return Err(Error::invalid("m ranges start at 1"));
    }
    if *ns.start() < family.min_n() {
        return Err(Error::invalid(format!(
            "{} is defined for n >= {}",
            family.label(),
            family.min_n()
        )));
    }
    let cells: Vec<(u32, usize)> = ms
        .clone()
        .flat_map(|m| ns.clone().map(move |n| (m, n)))
        .collect();
    if cells.is_empty() {
        return Err(Error::invalid("empty verification range"));
    }
    let idx_max = family.transform_index(*ns.end()).max(1);
    let f0 = family.f0_prefix(idx_max);
    let per_m: Vec<(u32, BellTerms, Vec<BigInt>)> = ms
        .clone()
        .into_par_iter()
        .map(|m| {
            let bell = BellTerms::new(&f0, m as i64)?;
            let gf = family.transform_terms(m, idx_max)?;
            Ok((m, bell, gf))
        })
        .collect::<Result<_>>()?;

    let results: Vec<Result<CellReport>> = cells
        .par_iter()
        .map(|&(m, n)| {
            let (_, bell, gf) = per_m
                .iter()
                .find(|(mm, _, _)| *mm == m)
                .expect("m in range");
            verify_cell(family, m, n, bell, gf, budget, closed).map_err(|e| match e {
                e if e.is_budget() => Error::BudgetAt {
                    m,
                    n,
                    source: Box::new(e),
                },
                e => e,
            })
        })
        .collect();
    let cells = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        family: family.label(),
        cells,
    })
}

fn verify_cell(
    family: &Family,
    m: u32,
    n: usize,
    bell: &BellTerms,
    gf: &[BigInt],
    budget: u64,
    closed: &(dyn Fn(u32, usize) -> BigInt + Sync),
) -> Result<CellReport> {
    let idx = family.transform_index(n);
    let bell_total = if idx == 0 {
        BigInt::one()
    } else {
        bell.row(idx).iter().sum()
    };
    let alphabet = u8::try_from(family.alphabet_size(m))
        .map_err(|_| Error::invalid("alphabet too large for brute force"))?;
    let brute = brute_count(alphabet, family.word_length(n), &family.predicate(), budget)?;
    let groups = enumerate_blockwords_by_blocks(family.block_system(), m, idx, budget)?;
    let enumerated: usize = groups.values().map(Vec::len).sum();

    let refinement_mismatch = if idx == 0 {
        None
    } else {
        (1..=idx).find_map(|k| {
            let got = BigInt::from(groups.get(&k).map_or(0, Vec::len));
            let want = bell.term(idx, k);
            (got != want).then_some((k, got, want))
        })
    };
    Ok(CellReport {
        m,
        n,
        values: vec![
            (Route::ClosedForm, closed(m, n)),
            (Route::Bell, bell_total),
            (Route::Transform, gf[idx].clone()),
            (Route::BruteForce, BigInt::from(brute)),
            (Route::BlockEnumeration, BigInt::from(enumerated)),
        ],
        refinement_mismatch,
    })
}
