//! Building blocks and the words built from them.
//!
//! A block in `W_b(j)` is a word of length `j` whose first letter is the head
//! `b`, followed by `j - 1` letters from `{0, ..., b-1}`. Any word that starts
//! with a letter `>= b` factors uniquely into blocks by cutting before every
//! letter `>= b`. A [`BlockSystem`] picks an admissible subset `U_j` of size
//! `f0(j)` in every length; the words of length `n` that start with `b` and
//! concatenate admissible blocks (later blocks may swap their head for any of
//! `b, ..., b+m-1`) are counted by the `m`-th invert transform of `f0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Default number of candidate words exhaustive routines may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A finite word over a small alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every letter is below `alphabet_size`.
    pub fn fits(&self, alphabet_size: u8) -> bool {
        self.0.iter().all(|&a| a < alphabet_size)
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }
}

impl From<&[u8]> for Word {
    fn from(letters: &[u8]) -> Self {
        Word(letters.to_vec())
    }
}

/// Letters print as base-36 digits.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.0 {
            let c = char::from_digit(a as u32, 36).ok_or(fmt::Error)?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(36)
                    .filter(|_| !c.is_ascii_uppercase())
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse {
                        line: 1,
                        message: format!("invalid letter {c:?} at position {i}"),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// `W_b(j)` in lexicographic order; holds `b^{j-1}` words.
pub fn blocks(b: u8, j: usize) -> Vec<Word> {
    assert!(b >= 1 && j >= 1, "blocks need b >= 1 and j >= 1");
    BlockIter::new(b, j).collect()
}

/// Lexicographic odometer over `W_b(j)`.
struct BlockIter {
    b: u8,
    next: Option<Vec<u8>>,
}

impl BlockIter {
    fn new(b: u8, j: usize) -> Self {
        let mut first = vec![0; j];
        first[0] = b;
        BlockIter {
            b,
            next: Some(first),
        }
    }
}

impl Iterator for BlockIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        while pos > 1 {
            pos -= 1;
            if succ[pos] + 1 < self.b {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(Word(current))
    }
}

/// Blocks of `W_b(j)` whose letters never increase, in lexicographic order.
fn nonincreasing_blocks(b: u8, j: usize) -> Vec<Word> {
    fn rec(prefix: &mut Vec<u8>, left: usize, max: u8, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for d in 0..=max {
            prefix.push(d);
            rec(prefix, left - 1, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![b], j - 1, b - 1, &mut out);
    out
}

pub type F0 = Arc<dyn Fn(usize) -> BigUint + Send + Sync>;
pub type BlockPredicate = Arc<dyn Fn(&[u8]) -> bool + Send + Sync>;

/// Rule choosing `U_j` inside `W_b(j)`.
#[derive(Clone)]
pub enum Selector {
    /// The `f0(j)` lexicographically smallest blocks.
    Lex,
    /// All blocks with nonincreasing letters; their number must equal `f0(j)`.
    NonIncreasing,
    /// All blocks accepted by the predicate; their number must equal `f0(j)`.
    Predicate(BlockPredicate),
}

impl fmt::Debug for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Lex => f.write_str("Lex"),
            Selector::NonIncreasing => f.write_str("NonIncreasing"),
            Selector::Predicate(_) => f.write_str("Predicate(..)"),
        }
    }
}

/// Head letter `b`, admissible block counts `f0` and a selector.
#[derive(Clone)]
pub struct BlockSystem {
    b: u8,
    f0: F0,
    selector: Selector,
}

impl fmt::Debug for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlockSystem")
            .field("b", &self.b)
            .field("selector", &self.selector)
            .finish_non_exhaustive()
    }
}

impl BlockSystem {
    pub fn new(
        b: u8,
        f0: impl Fn(usize) -> BigUint + Send + Sync + 'static,
        selector: Selector,
    ) -> Result<Self> {
        if b == 0 {
            return Err(Error::invalid("block head b must be >= 1"));
        }
        Ok(BlockSystem {
            b,
            f0: Arc::new(f0),
            selector,
        })
    }

    /// System over a finite `f0` prefix; `f0(j) = 0` beyond it.
    pub fn from_prefix(b: u8, prefix: Vec<u64>, selector: Selector) -> Result<Self> {
        Self::new(
            b,
            move |j| BigUint::from(prefix.get(j - 1).copied().unwrap_or(0)),
            selector,
        )
    }

    pub fn b(&self) -> u8 {
        self.b
    }

    pub fn f0(&self, j: usize) -> BigUint {
        (self.f0)(j)
    }

    pub fn selector(&self) -> &Selector {
        &self.selector
    }

    /// Checks `f0(j) <= b^{j-1}` for `1 <= j <= n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        (1..=n).try_for_each(|j| self.check_count(j).map(|_| ()))
    }

    fn check_count(&self, j: usize) -> Result<BigUint> {
        let count = self.f0(j);
        let available = num_traits::pow::pow(BigUint::from(self.b), j - 1);
        if count > available {
            return Err(Error::TooManyBlocks {
                j,
                count: count.to_string(),
                available: available.to_string(),
            });
        }
        Ok(count)
    }
}

/// `U_j`, sorted lexicographically.
pub fn select_blocks(sys: &BlockSystem, j: usize) -> Result<Vec<Word>> {
    if j == 0 {
        return Err(Error::invalid("block length must be >= 1"));
    }
    let count = sys.check_count(j)?;
    let mismatch = |found: usize| Error::SelectorMismatch {
        j,
        expected: count.to_string(),
        found,
    };
    let chosen = match &sys.selector {
        Selector::Lex => {
            let take = count
                .to_usize()
                .ok_or_else(|| Error::invalid(format!("f0({j}) too large to materialize")))?;
            BlockIter::new(sys.b, j).take(take).collect()
        }
        Selector::NonIncreasing => nonincreasing_blocks(sys.b, j),
        Selector::Predicate(keep) => BlockIter::new(sys.b, j)
            .filter(|w| keep(w.letters()))
            .collect(),
    };
    if BigUint::from(chosen.len()) != count {
        return Err(mismatch(chosen.len()));
    }
    Ok(chosen)
}

/// `U_j^m`: every block with its head `b` replaced by each of `b, ..., b+m-1`.
pub fn expand_heads(blocks: &[Word], b: u8, m: u8) -> Vec<Word> {
    let mut out = Vec::with_capacity(blocks.len() * m as usize);
    for block in blocks {
        debug_assert_eq!(block.0.first(), Some(&b));
        for head in b..b + m {
            let mut letters = block.0.clone();
            letters[0] = head;
            out.push(Word(letters));
        }
    }
    out.sort();
    out
}

/// Admissible blocks per length plus suffix-fill counts for one `(m, n)`.
struct Plan {
    first: Vec<Vec<Word>>,
    later: Vec<Vec<Word>>,
    /// `fill[r]`: ways to fill `r` letters with blocks from `U^m`.
    fill: Vec<BigUint>,
}

impl Plan {
    fn new(sys: &BlockSystem, m: u32, n: usize, materialize: bool) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("m must be >= 1"));
        }
        let m8 = u8::try_from(m)
            .ok()
            .filter(|&m8| sys.b.checked_add(m8).is_some())
            .ok_or_else(|| Error::invalid(format!("alphabet b+m too large (m={m})")))?;
        let mut first = vec![Vec::new(); n + 1];
        let mut later = vec![Vec::new(); n + 1];
        let mut sizes = vec![BigUint::zero(); n + 1];
        for j in 1..=n {
            if materialize {
                let u = select_blocks(sys, j)?;
                later[j] = expand_heads(&u, sys.b, m8);
                sizes[j] = BigUint::from(u.len());
                first[j] = u;
            } else {
                sizes[j] = sys.check_count(j)?;
            }
        }
        let mut fill = vec![BigUint::zero(); n + 1];
        fill[0] = BigUint::one();
        for r in 1..=n {
            let mut acc = BigUint::zero();
            for j in 1..=r {
                if !sizes[j].is_zero() {
                    acc += &sizes[j] * &fill[r - j] * m;
                }
            }
            fill[r] = acc;
        }
        let plan = Plan { first, later, fill };
        Ok(plan)
    }

    fn total(&self, sys: &BlockSystem, n: usize) -> BigUint {
        if n == 0 {
            return BigUint::one();
        }
        (1..=n).map(|j| sys.f0(j) * &self.fill[n - j]).sum()
    }
}

/// `|𝒰^m_{b,n}(f0)|` by counting block fillings, without enumeration.
pub fn count_blockwords(sys: &BlockSystem, m: u32, n: usize) -> Result<BigUint> {
    let plan = Plan::new(sys, m, n, false)?;
    Ok(plan.total(sys, n))
}

/// `𝒰^m_{b,n}(f0)` grouped by the number of blocks, each group sorted.
///
/// `n = 0` yields the empty word with zero blocks. Fails with
/// [`Error::BudgetExceeded`] when the set holds more than `budget` words.
pub fn enumerate_blockwords_by_blocks(
    sys: &BlockSystem,
    m: u32,
    n: usize,
    budget: u64,
) -> Result<BTreeMap<usize, Vec<Word>>> {
    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    if n == 0 {
        groups.insert(0, vec![Word::empty()]);
        return Ok(groups);
    }
    let plan = Plan::new(sys, m, n, true)?;
    let total = plan.total(sys, n);
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: total.to_string(),
            budget,
        });
    }

    fn extend(
        plan: &Plan,
        left: usize,
        word: &mut Vec<u8>,
        k: usize,
        groups: &mut BTreeMap<usize, Vec<Word>>,
    ) {
        if left == 0 {
            groups.entry(k).or_default().push(Word(word.clone()));
            return;
        }
        for j in 1..=left {
            if plan.fill[left - j].is_zero() {
                continue;
            }
            for block in &plan.later[j] {
                word.extend_from_slice(&block.0);
                extend(plan, left - j, word, k + 1, groups);
                word.truncate(word.len() - j);
            }
        }
    }

    let mut word = Vec::with_capacity(n);
    for j in 1..=n {
        if plan.fill[n - j].is_zero() {
            continue;
        }
        for block in &plan.first[j] {
            word.extend_from_slice(&block.0);
            extend(&plan, n - j, &mut word, 1, &mut groups);
            word.clear();
        }
    }
    for words in groups.values_mut() {
        words.sort();
    }
    Ok(groups)
}

/// `𝒰^m_{b,n}(f0)` as a sorted list.
pub fn enumerate_blockwords(sys: &BlockSystem, m: u32, n: usize, budget: u64) -> Result<Vec<Word>> {
    let mut all: Vec<Word> = enumerate_blockwords_by_blocks(sys, m, n, budget)?
        .into_values()
        .flatten()
        .collect();
    all.sort();
    Ok(all)
}

/// Splits `word` before every letter `>= b`.
pub fn decompose(word: &Word, b: u8) -> Result<Vec<Word>> {
    let letters = word.letters();
    match letters.first() {
        None => return Ok(Vec::new()),
        Some(&first) if first < b => {
            return Err(Error::Decomposition(format!(
                "{word} starts with {first}, below the head letter {b}"
            )))
        }
        _ => {}
    }
    let mut parts: Vec<Word> = Vec::new();
    for &a in letters {
        if a >= b {
            parts.push(Word(vec![a]));
        } else {
            parts.last_mut().expect("first letter is a head").0.push(a);
        }
    }
    Ok(parts)
}

/// A restriction tested against complete words.
pub trait WordPredicate: Sync {
    fn accepts(&self, word: &[u8]) -> bool;

    /// When true, every prefix of an accepted word is accepted, so exhaustive
    /// search may prune rejected prefixes.
    fn prefix_closed(&self) -> bool {
        false
    }
}

/// Adapts a closure to [`WordPredicate`].
pub struct FnPredicate<F> {
    f: F,
    prefix_closed: bool,
}

impl<F: Fn(&[u8]) -> bool + Sync> FnPredicate<F> {
    pub fn new(f: F) -> Self {
        FnPredicate {
            f,
            prefix_closed: false,
        }
    }

    pub fn prefix_closed(f: F) -> Self {
        FnPredicate {
            f,
            prefix_closed: true,
        }
    }
}

impl<F: Fn(&[u8]) -> bool + Sync> WordPredicate for FnPredicate<F> {
    fn accepts(&self, word: &[u8]) -> bool {
        (self.f)(word)
    }

    fn prefix_closed(&self) -> bool {
        self.prefix_closed
    }
}

impl<P: WordPredicate + ?Sized> WordPredicate for &P {
    fn accepts(&self, word: &[u8]) -> bool {
        (**self).accepts(word)
    }

    fn prefix_closed(&self) -> bool {
        (**self).prefix_closed()
    }
}

impl<P: WordPredicate + ?Sized> WordPredicate for Box<P> {
    fn accepts(&self, word: &[u8]) -> bool {
        (**self).accepts(word)
    }

    fn prefix_closed(&self) -> bool {
        (**self).prefix_closed()
    }
}

fn check_brute_budget(alphabet_size: u8, n: usize, budget: u64) -> Result<()> {
    if alphabet_size == 0 {
        return Err(Error::invalid("alphabet size must be >= 1"));
    }
    let candidates = num_traits::pow::pow(BigUint::from(alphabet_size), n);
    if candidates > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: candidates.to_string(),
            budget,
        });
    }
    Ok(())
}

/// Visits every accepted word of length `n` over `{0, ..., A-1}` in
/// lexicographic order.
fn for_each_accepted(
    alphabet_size: u8,
    n: usize,
    predicate: &dyn WordPredicate,
    visit: &mut dyn FnMut(&[u8]),
) {
    fn rec(
        a: u8,
        n: usize,
        p: &dyn WordPredicate,
        prune: bool,
        word: &mut Vec<u8>,
        visit: &mut dyn FnMut(&[u8]),
    ) {
        if word.len() == n {
            if p.accepts(word) {
                visit(word);
            }
            return;
        }
        for letter in 0..a {
            word.push(letter);
            if !prune || p.accepts(word) {
                rec(a, n, p, prune, word, visit);
            }
            word.pop();
        }
    }
    let prune = predicate.prefix_closed();
    if prune && !predicate.accepts(&[]) {
        return;
    }
    let mut word = Vec::with_capacity(n);
    rec(alphabet_size, n, predicate, prune, &mut word, visit);
}

/// Number of length-`n` words over `{0, ..., A-1}` accepted by `predicate`,
/// by exhaustive generation.
///
/// Fails with [`Error::BudgetExceeded`] when `A^n > budget`.
pub fn brute_count(
    alphabet_size: u8,
    n: usize,
    predicate: &dyn WordPredicate,
    budget: u64,
) -> Result<u64> {
    check_brute_budget(alphabet_size, n, budget)?;
    let mut count = 0u64;
    for_each_accepted(alphabet_size, n, predicate, &mut |_| count += 1);
    Ok(count)
}

/// The accepted words themselves, in lexicographic order.
pub fn brute_words(
    alphabet_size: u8,
    n: usize,
    predicate: &dyn WordPredicate,
    budget: u64,
) -> Result<Vec<Word>> {
    check_brute_budget(alphabet_size, n, budget)?;
    let mut out = Vec::new();
    for_each_accepted(alphabet_size, n, predicate, &mut |w| {
        out.push(Word::from(w))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn block_sets() {
        assert_eq!(blocks(1, 3), words(&["100"]));
        assert_eq!(blocks(2, 3), words(&["200", "201", "210", "211"]));
        assert_eq!(blocks(3, 4).len(), 27);
        assert!(blocks(3, 4)
            .iter()
            .all(|b| b.letters()[0] == 3 && b.fits(4)));
        assert_eq!(blocks(5, 1), words(&["5"]));
    }

    #[test]
    fn nonincreasing_selection() {
        let sys = BlockSystem::new(2, BigUint::from, Selector::NonIncreasing).unwrap();
        assert_eq!(
            select_blocks(&sys, 3).unwrap(),
            words(&["200", "210", "211"])
        );
        let tri = BlockSystem::new(
            3,
            |j| BigUint::from(j * (j + 1) / 2),
            Selector::NonIncreasing,
        )
        .unwrap();
        assert_eq!(
            select_blocks(&tri, 3).unwrap(),
            words(&["300", "310", "311", "320", "321", "322"])
        );
    }

    #[test]
    fn zero_count_selects_nothing() {
        let sys = BlockSystem::from_prefix(1, vec![1, 0, 1, 1], Selector::Lex).unwrap();
        assert!(select_blocks(&sys, 2).unwrap().is_empty());
        assert!(select_blocks(&sys, 9).unwrap().is_empty());
    }

    #[test]
    fn lex_takes_smallest() {
        let sys = BlockSystem::from_prefix(2, vec![1, 1, 3], Selector::Lex).unwrap();
        assert_eq!(
            select_blocks(&sys, 3).unwrap(),
            words(&["200", "201", "210"])
        );
    }

    #[test]
    fn selection_errors() {
        let sys = BlockSystem::from_prefix(1, vec![1, 2], Selector::Lex).unwrap();
        assert!(matches!(
            select_blocks(&sys, 2),
            Err(Error::TooManyBlocks { j: 2, .. })
        ));
        let bad = BlockSystem::new(2, |_| BigUint::from(1u32), Selector::NonIncreasing).unwrap();
        assert!(matches!(
            select_blocks(&bad, 2),
            Err(Error::SelectorMismatch { j: 2, found: 2, .. })
        ));
        let pred = BlockSystem::new(
            2,
            |_| BigUint::from(1u32),
            Selector::Predicate(Arc::new(|w: &[u8]| w.iter().skip(1).all(|&a| a == 0))),
        )
        .unwrap();
        assert_eq!(select_blocks(&pred, 4).unwrap(), words(&["2000"]));
        assert!(BlockSystem::from_prefix(0, vec![1], Selector::Lex).is_err());
    }

    #[test]
    fn head_expansion() {
        let u = words(&["200", "210"]);
        let um = expand_heads(&u, 2, 3);
        assert_eq!(um.len(), 6);
        assert_eq!(um, words(&["200", "210", "300", "310", "400", "410"]));
    }

    #[test]
    fn single_block_kind() {
        let sys = BlockSystem::from_prefix(1, vec![1], Selector::Lex).unwrap();
        assert_eq!(
            enumerate_blockwords(&sys, 1, 4, 100).unwrap(),
            words(&["1111"])
        );
    }

    #[test]
    fn empty_length_convention() {
        let sys = BlockSystem::from_prefix(1, vec![1], Selector::Lex).unwrap();
        let groups = enumerate_blockwords_by_blocks(&sys, 2, 0, 1).unwrap();
        assert_eq!(groups.get(&0), Some(&vec![Word::empty()]));
        assert_eq!(count_blockwords(&sys, 2, 0).unwrap(), BigUint::one());
    }

    #[test]
    fn enumeration_budget() {
        let sys = BlockSystem::from_prefix(1, vec![1, 1], Selector::Lex).unwrap();
        // f_1(10) = F(11) = 89
        assert_eq!(count_blockwords(&sys, 1, 10).unwrap(), BigUint::from(89u32));
        assert!(matches!(
            enumerate_blockwords(&sys, 1, 10, 88),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(enumerate_blockwords(&sys, 1, 10, 89).unwrap().len(), 89);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            decompose(&w("10011"), 1).unwrap(),
            words(&["100", "1", "1"])
        );
        assert_eq!(decompose(&w("2"), 2).unwrap(), words(&["2"]));
        assert_eq!(decompose(&w("12000"), 1).unwrap(), words(&["1", "2000"]));
        assert!(decompose(&w("0110"), 1).is_err());
        assert!(decompose(&Word::empty(), 1).unwrap().is_empty());
    }

    #[test]
    fn brute_examples() {
        let even_zero_runs =
            FnPredicate::new(|w: &[u8]| w.split(|&a| a != 0).all(|run| run.len() % 2 == 0));
        assert_eq!(
            brute_count(2, 4, &even_zero_runs, DEFAULT_BUDGET).unwrap(),
            5
        );
        let listed = brute_words(2, 4, &even_zero_runs, DEFAULT_BUDGET).unwrap();
        assert_eq!(listed, words(&["0000", "0011", "1001", "1100", "1111"]));

        let no_01 = FnPredicate::prefix_closed(|w: &[u8]| !w.windows(2).any(|p| p == [0, 1]));
        assert_eq!(brute_count(3, 2, &no_01, DEFAULT_BUDGET).unwrap(), 8);

        let never = FnPredicate::new(|_: &[u8]| false);
        let always = FnPredicate::new(|_: &[u8]| true);
        assert_eq!(brute_count(5, 0, &always, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(brute_count(5, 0, &never, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn brute_budget_is_explicit() {
        let always = FnPredicate::new(|_: &[u8]| true);
        assert!(matches!(
            brute_count(10, 9, &always, 100_000_000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(brute_count(10, 3, &always, 1000).unwrap(), 1000);
        assert!(brute_count(10, 3, &always, 999).is_err());
    }

    #[test]
    fn pruning_agrees_with_full_scan() {
        let closed = FnPredicate::prefix_closed(|w: &[u8]| !w.windows(3).any(|p| p == [0, 0, 0]));
        let open = FnPredicate::new(|w: &[u8]| !w.windows(3).any(|p| p == [0, 0, 0]));
        for n in 0..10 {
            assert_eq!(
                brute_count(3, n, &closed, DEFAULT_BUDGET).unwrap(),
                brute_count(3, n, &open, DEFAULT_BUDGET).unwrap()
            );
        }
    }

    #[test]
    fn word_text_round_trip() {
        let word = w("0a1b");
        assert_eq!(word.letters(), &[0, 10, 1, 11]);
        assert_eq!(word.to_string(), "0a1b");
        assert!("12-".parse::<Word>().is_err());
        assert!("1A".parse::<Word>().is_err());
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
    }
}
