//! Extension products, the levels `[T]_n`, generation time and Orlov spectra of linear
//! Nakayama algebras.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::algebra::{Algebra, Uniserial};
use crate::error::{Error, Result};
use crate::extprod::{sum_generators, ConfigBound, ProductEngine, SumGenerators};
use crate::homext::extension_middle;
use crate::indecset::IndecSet;

/// Largest indecomposable count enumerated by [`orlov_spectrum`] without `force`.
pub const SPECTRUM_LIMIT: usize = 24;

/// Precomputed middle-term tables for one linear algebra.
#[derive(Debug, Clone)]
pub struct ExtensionClosure<'a> {
    alg: &'a Algebra,
    count: usize,
    /// `middle[sub * count + quot]`: summands of the non-split extension, empty if it splits.
    middle: Vec<IndecSet>,
    /// Summands that only appear when a side has several summands.
    extras: SumGenerators,
    socle_bit: Vec<u64>,
    top_bit: Vec<u64>,
}

impl<'a> ExtensionClosure<'a> {
    pub fn new(alg: &'a Algebra) -> Result<Self> {
        Self::with_bound(alg, ConfigBound::default())
    }

    /// Like [`ExtensionClosure::new`] with an explicit limit on the multi-summand search.
    pub fn with_bound(alg: &'a Algebra, bound: ConfigBound) -> Result<Self> {
        alg.require_linear("extension closure")?;
        IndecSet::check_capacity(alg)?;
        let indec = alg.indecomposables();
        let count = indec.len();
        let mut middle = vec![IndecSet::EMPTY; count * count];
        for (s, sub) in indec.iter().enumerate() {
            for (q, quot) in indec.iter().enumerate() {
                if let Some(m) = extension_middle(alg, quot, sub)? {
                    middle[s * count + q] = IndecSet::from_module(alg, &m)?;
                }
            }
        }
        let socle_bit = indec
            .iter()
            .map(|u| 1u64 << (alg.socle_vertex(u) - 1))
            .collect();
        let top_bit = indec.iter().map(|u| 1u64 << (u.top - 1)).collect();
        let extras = sum_generators(alg, &ProductEngine::new(alg)?, bound)?;
        Ok(ExtensionClosure {
            alg,
            count,
            middle,
            extras,
            socle_bit,
            top_bit,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn all(&self) -> IndecSet {
        IndecSet::full(self.count)
    }

    pub fn set_of(&self, items: &[Uniserial]) -> Result<IndecSet> {
        IndecSet::from_uniserials(self.alg, items)
    }

    /// Indecomposables of `sub • quot`: middle terms of `0 -> U -> X -> V -> 0` with
    /// `U ∈ add sub` and `V ∈ add quot`.
    pub fn star(&self, sub: IndecSet, quot: IndecSet) -> IndecSet {
        let mut out = sub.union(quot);
        for s in sub.iter() {
            let row = &self.middle[s * self.count..(s + 1) * self.count];
            for q in quot.iter() {
                out = out.union(row[q]);
            }
        }
        out.union(self.extras.extras(sub, quot))
    }

    pub fn sum_generators(&self) -> &SumGenerators {
        &self.extras
    }

    /// `[T]_n`, with `[T]_0` empty and `[T]_n = [T]_1 • [T]_(n-1)`.
    pub fn bracket(&self, t: IndecSet, n: usize) -> IndecSet {
        let step = self.stepper(t);
        let mut cur = IndecSet::EMPTY;
        for level in 1..=n {
            let next = if level == 1 { t } else { step.apply(cur) };
            if next == cur {
                break;
            }
            cur = next;
        }
        cur
    }

    /// `[T]_1 ⊆ [T]_2 ⊆ ...` up to and including the first repeated level.
    pub fn levels(&self, t: IndecSet) -> Vec<IndecSet> {
        let step = self.stepper(t);
        let mut out = vec![t];
        loop {
            let next = step.apply(*out.last().unwrap());
            if next == *out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    /// Least `n` with `[T]_(n+1)` everything, `None` when the chain stalls below it.
    pub fn generation_time(&self, t: IndecSet) -> Option<usize> {
        self.stepper(t).generation_time(self.all())
    }

    pub fn covers_socles_and_tops(&self, t: IndecSet) -> bool {
        let full = (1u64 << self.alg.n()) - 1;
        let (mut soc, mut top) = (0u64, 0u64);
        for k in t.iter() {
            soc |= self.socle_bit[k];
            top |= self.top_bit[k];
        }
        soc == full && top == full
    }

    pub fn is_strong_generator(&self, t: IndecSet) -> bool {
        self.covers_socles_and_tops(t) && self.generation_time(t).is_some()
    }

    fn stepper(&self, t: IndecSet) -> Stepper {
        // by_quot[q] collects every middle term with quotient q and submodule in T.
        let mut by_quot = vec![IndecSet::EMPTY; self.count];
        for s in t.iter() {
            let row = &self.middle[s * self.count..(s + 1) * self.count];
            for (q, m) in row.iter().enumerate() {
                by_quot[q] = by_quot[q].union(*m);
            }
        }
        let mut extra = Vec::new();
        for (&target, keys) in &self.extras.by_target {
            for &(s, q) in keys {
                if s.is_subset(t) {
                    extra.push((target, q));
                }
            }
        }
        Stepper { t, by_quot, extra }
    }

    /// Simples that every strong generator must contain: projective or injective simples.
    fn forced_members(&self) -> IndecSet {
        let mut forced = IndecSet::EMPTY;
        for i in 1..=self.alg.n() {
            let s = Uniserial::new(i, 1);
            if self.alg.is_projective(&s) || self.alg.is_injective(&s) {
                forced.insert(self.alg.index_of(&s).unwrap());
            }
        }
        forced
    }
}

struct Stepper {
    t: IndecSet,
    by_quot: Vec<IndecSet>,
    /// `(target, quotient support)` for multi-summand generators whose submodules lie in `T`.
    extra: Vec<(usize, IndecSet)>,
}

impl Stepper {
    fn apply(&self, prev: IndecSet) -> IndecSet {
        let mut out = prev
            .iter()
            .fold(self.t.union(prev), |acc, q| acc.union(self.by_quot[q]));
        for &(target, q) in &self.extra {
            if q.is_subset(prev) {
                out.insert(target);
            }
        }
        out
    }

    fn generation_time(&self, all: IndecSet) -> Option<usize> {
        if self.t.is_empty() {
            return None;
        }
        let mut cur = self.t;
        let mut n = 0;
        loop {
            if cur == all {
                return Some(n);
            }
            let next = self.apply(cur);
            if next == cur {
                return None;
            }
            cur = next;
            n += 1;
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SpectrumOptions {
    /// Allow enumeration beyond [`SPECTRUM_LIMIT`] indecomposables.
    pub force: bool,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
    /// Skip subsets that fail the socle/top and forced-simple filters without closure runs.
    pub prune: bool,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            force: false,
            jobs: 0,
            prune: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrlovSpectrum {
    pub spectrum: BTreeSet<usize>,
    /// For each generation time, the numerically smallest generator mask attaining it.
    pub witnesses: BTreeMap<usize, IndecSet>,
    pub generators: u64,
}

impl OrlovSpectrum {
    pub fn ext_dim(&self) -> Option<usize> {
        self.spectrum.first().copied()
    }

    pub fn u_dim(&self) -> Option<usize> {
        self.spectrum.last().copied()
    }
}

const BLOCK_BITS: u32 = 12;

/// Generation times of all multiplicity-free strong generators.
pub fn orlov_spectrum(alg: &Algebra, opts: SpectrumOptions) -> Result<OrlovSpectrum> {
    alg.require_linear("orlov_spectrum")?;
    let count = alg.indecomposable_count();
    if count > SPECTRUM_LIMIT && !opts.force {
        return Err(Error::Refused(format!(
            "{count} indecomposables means 2^{count} candidate generators; pass --force to enumerate"
        )));
    }
    if count >= 64 {
        return Err(Error::Refused(format!(
            "{count} indecomposables cannot be enumerated"
        )));
    }
    let closure = ExtensionClosure::new(alg)?;
    let forced = closure.forced_members();
    let all = closure.all();
    let total: u64 = 1u64 << count;
    let block = 1u64 << BLOCK_BITS.min(count as u32);
    let blocks = total / block;

    let scan = |b: u64| {
        let mut found: BTreeMap<usize, u64> = BTreeMap::new();
        let mut generators = 0u64;
        for mask in b * block..(b + 1) * block {
            let t = IndecSet(mask as u128);
            if opts.prune && (!forced.is_subset(t) || !closure.covers_socles_and_tops(t)) {
                continue;
            }
            if let Some(time) = closure.stepper(t).generation_time(all) {
                generators += 1;
                found.entry(time).or_insert(mask);
            }
        }
        (found, generators)
    };
    let merge = |(mut a, ga): (BTreeMap<usize, u64>, u64), (b, gb): (BTreeMap<usize, u64>, u64)| {
        for (time, mask) in b {
            let slot = a.entry(time).or_insert(mask);
            *slot = (*slot).min(mask);
        }
        (a, ga + gb)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Refused(format!("cannot start worker pool: {e}")))?;
    let (found, generators) = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(scan)
            .reduce(|| (BTreeMap::new(), 0), merge)
    });

    Ok(OrlovSpectrum {
        spectrum: found.keys().copied().collect(),
        witnesses: found
            .into_iter()
            .map(|(t, m)| (t, IndecSet(m as u128)))
            .collect(),
        generators,
    })
}

/// Checks three structural facts about levels on the given pairs `(T1, T2)`:
/// `[T1]_m • [T2]_n ⊆ [T1 ⊕ T2]_(m+n)` for `m + n <= max_total`,
/// adding summands never increases generation time,
/// and the generation time is the level just below the first full one.
/// Returns a description of each violation.
pub fn verify_subset_lemmas(
    closure: &ExtensionClosure<'_>,
    samples: &[(IndecSet, IndecSet)],
    max_total: usize,
) -> Vec<String> {
    let all = closure.all();
    samples
        .par_iter()
        .flat_map_iter(|&(t1, t2)| {
            let mut bad = Vec::new();
            let l1 = levels_upto(closure, t1, max_total);
            let l2 = levels_upto(closure, t2, max_total);
            let l12 = levels_upto(closure, t1.union(t2), max_total);
            for m in 1..max_total {
                for n in 1..=max_total - m {
                    let prod = closure.star(l1[m], l2[n]);
                    if !prod.is_subset(l12[m + n]) {
                        bad.push(format!(
                            "product inclusion fails for {t1} and {t2} at m={m}, n={n}"
                        ));
                    }
                }
            }
            if let Some(tx) = closure.generation_time(t1) {
                match closure.generation_time(t1.union(t2)) {
                    Some(txy) if txy <= tx => {}
                    other => bad.push(format!(
                        "time of {t1} is {tx} but adding {t2} gives {other:?}"
                    )),
                }
                let levels = closure.levels(t1);
                let first_full = levels.iter().position(|&l| l == all);
                if first_full != Some(tx) {
                    bad.push(format!("time {tx} of {t1} disagrees with its level chain"));
                }
            }
            bad
        })
        .collect()
}

/// `levels[k] = [T]_k` for `0 <= k <= upto`.
fn levels_upto(closure: &ExtensionClosure<'_>, t: IndecSet, upto: usize) -> Vec<IndecSet> {
    let step = closure.stepper(t);
    let mut out = vec![IndecSet::EMPTY, t];
    while out.len() <= upto {
        let next = step.apply(*out.last().unwrap());
        out.push(next);
    }
    out
}
