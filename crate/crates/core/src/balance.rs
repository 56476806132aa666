//! Class-representativeness enumeration and balanced undersampling.
//!
//! For `c` classes and granularity `r`, let `W = round(1/r)`. Every vector of
//! integer weights `(w_1, .., w_c)` with `w_k ≥ 1` and `Σ w_k = W` defines one
//! representativeness vector: class `k < c-1` gets fraction `w_k · r` and the
//! last class takes the complement `1 - Σ_{k<c-1} w_k · r`. There are
//! `C(W-1, c-1)` such vectors, emitted in lexicographic order of the weights.
//!
//! A balanced subset realizing a vector draws, for each class `k`,
//! `max(1, round(fraction_k · n_min))` samples of that class without
//! replacement, where `n_min` is the size of the rarest class in the pool.

use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::dataset::class_counts;
use crate::error::{Error, Result};
use crate::rng::rng_for;

/// Fractions are stored as integer numerators over a power-of-ten scale
/// (`r = 0.11` gives scale 100) so they sum to one exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentativenessVector {
    /// Position in the enumeration, starting at 0.
    pub index: usize,
    pub weights: Vec<u32>,
    pub fractions: Vec<f64>,
    pub numerators: Vec<u64>,
    pub scale: u64,
    pub r: f64,
}

impl RepresentativenessVector {
    pub fn n_classes(&self) -> usize {
        self.weights.len()
    }
}

/// `round(1/r)`; the number of granularity steps that fit in one.
pub fn granularity_steps(r: f64) -> Result<u32> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter(format!("r must lie in (0, 1), got {r}")));
    }
    Ok((1.0 / r).round() as u32)
}

/// Smallest power of ten that makes `r` (nearly) integral, capped at 1e9.
fn decimal_scale(r: f64) -> (u64, u64) {
    let mut scale = 1u64;
    for _ in 0..=9 {
        let scaled = r * scale as f64;
        if (scaled - scaled.round()).abs() < 1e-9 * scale as f64 || scale == 1_000_000_000 {
            return (scale, scaled.round() as u64);
        }
        scale *= 10;
    }
    unreachable!()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of vectors [`enumerate_representativeness`] yields.
pub fn enumeration_size(c: usize, r: f64) -> Result<usize> {
    let w = granularity_steps(r)? as usize;
    check_feasible(c, w)?;
    Ok(binomial(w as u64 - 1, c as u64 - 1) as usize)
}

fn check_feasible(c: usize, w: usize) -> Result<()> {
    if c < 2 {
        return Err(Error::TooFewClasses(c));
    }
    if w < c {
        return Err(Error::InvalidParameter(format!(
            "granularity admits {w} steps, fewer than the {c} classes that each need one"
        )));
    }
    Ok(())
}

pub fn enumerate_representativeness(c: usize, r: f64) -> Result<Vec<RepresentativenessVector>> {
    let total = granularity_steps(r)?;
    check_feasible(c, total as usize)?;
    let (scale, r_num) = decimal_scale(r);

    let mut out = Vec::with_capacity(binomial(total as u64 - 1, c as u64 - 1) as usize);
    let mut weights = Vec::with_capacity(c);
    compositions(total, c, &mut weights, &mut |w| {
        let mut numerators: Vec<u64> = w[..c - 1].iter().map(|&wk| wk as u64 * r_num).collect();
        let head: u64 = numerators.iter().sum();
        numerators.push(scale.saturating_sub(head));
        let fractions = numerators.iter().map(|&n| n as f64 / scale as f64).collect();
        out.push(RepresentativenessVector {
            index: out.len(),
            weights: w.to_vec(),
            fractions,
            numerators,
            scale,
            r,
        });
    });
    Ok(out)
}

fn compositions(remaining: u32, parts: usize, prefix: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if parts == 1 {
        prefix.push(remaining);
        emit(prefix);
        prefix.pop();
        return;
    }
    for w in 1..=remaining - (parts as u32 - 1) {
        prefix.push(w);
        compositions(remaining - w, parts - 1, prefix, emit);
        prefix.pop();
    }
}

/// Sample indices (into the pool's label slice) realizing one vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BalancedSubset {
    pub spec: RepresentativenessVector,
    /// Sorted ascending.
    pub indices: Vec<usize>,
    pub per_class_counts: Vec<usize>,
    pub seed: u64,
}

/// `max(1, round(b_k · n_min))` per class, rounding halves up. Computed on the
/// exact numerators so that halves such as `0.7 · 5` are not at the mercy of
/// binary floating point.
pub fn subset_counts(spec: &RepresentativenessVector, n_min: usize) -> Vec<usize> {
    let (scale, n_min) = (spec.scale as u128, n_min as u128);
    spec.numerators
        .iter()
        .map(|&num| (((2 * num as u128 * n_min + scale) / (2 * scale)) as usize).max(1))
        .collect()
}

pub fn build_subset(labels: &[usize], spec: &RepresentativenessVector, seed: u64) -> Result<BalancedSubset> {
    let c = spec.n_classes();
    if let Some(&bad) = labels.iter().find(|&&y| y >= c) {
        return Err(Error::InvalidParameter(format!(
            "label index {bad} out of range for {c} classes"
        )));
    }
    let counts = class_counts(labels, c);
    if let Some(k) = counts.iter().position(|&n| n == 0) {
        return Err(Error::EmptyClass(k));
    }
    let n_min = *counts.iter().min().expect("c >= 2");
    let per_class_counts = subset_counts(spec, n_min);

    let mut pools: Vec<Vec<usize>> = vec![Vec::new(); c];
    for (i, &y) in labels.iter().enumerate() {
        pools[y].push(i);
    }
    let mut indices = Vec::with_capacity(per_class_counts.iter().sum());
    for (k, (pool, &want)) in pools.iter().zip(&per_class_counts).enumerate() {
        debug_assert!(want <= pool.len());
        let mut rng = rng_for(seed, &[0xBA1A_4CE5, spec.index as u64, k as u64]);
        indices.extend(sample(&mut rng, pool.len(), want).into_iter().map(|p| pool[p]));
    }
    indices.sort_unstable();
    Ok(BalancedSubset {
        spec: spec.clone(),
        indices,
        per_class_counts,
        seed,
    })
}

pub fn build_all_subsets(labels: &[usize], c: usize, r: f64, seed: u64) -> Result<Vec<BalancedSubset>> {
    enumerate_representativeness(c, r)?
        .iter()
        .map(|spec| build_subset(labels, spec, seed))
        .collect()
}
