//! Random and structured braid words used by the separation witnesses.

use rand::Rng;

use super::word::{concentric_generator, conjugate, permutation_of, BraidWord};
use crate::error::BraidError;

/// Uniformly random letters `±1 … ±(n-1)`; empty when `n = 1`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters drawn in range")
}

/// A random word raised to the order of its permutation, hence pure.
pub fn random_pure_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let w = random_word(rng, n, len);
    let order = permutation_of(&w).order();
    w.pow(order as i32)
}

/// `∏ concentric_generator(n, l)^{coeffs[l-1]}`.
pub fn concentric_combination(n: usize, coeffs: &[i32]) -> Result<BraidWord, BraidError> {
    let mut out = BraidWord::identity(n);
    for (l, &c) in coeffs.iter().enumerate() {
        out = out.concat(&concentric_generator(n, l + 1)?.pow(c))?;
    }
    Ok(out)
}

/// Strand `j` travels once around the cluster of strands `1 … k` and comes
/// back, passing in front of the strands between them both ways.
pub fn cluster_orbit_word(n: usize, k: usize, j: usize) -> Result<BraidWord, BraidError> {
    if k == 0 || j <= k || j > n {
        return Err(BraidError::IndexOutOfRange { index: j as i64, n });
    }
    let approach = BraidWord::new(n, (k + 1..j).rev().map(|i| i as i32).collect())?;
    let around: Vec<i32> = (1..=k).rev().chain(1..=k).map(|i| i as i32).collect();
    conjugate(&BraidWord::new(n, around)?, &approach)
}

/// A product of cluster orbits with coefficients in `[-3, 3]`, not all zero,
/// in random order. Every such braid has a strand linking the whole cluster.
pub fn orbit_sample<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Result<BraidWord, BraidError> {
    let orbits: Vec<BraidWord> = (k + 1..=n)
        .map(|j| cluster_orbit_word(n, k, j))
        .collect::<Result<_, _>>()?;
    let mut coeffs: Vec<i32> = (0..orbits.len()).map(|_| rng.gen_range(-3..=3)).collect();
    if coeffs.iter().all(|&c| c == 0) {
        let i = rng.gen_range(0..coeffs.len());
        coeffs[i] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut out = BraidWord::identity(n);
    for i in order {
        out = out.concat(&orbits[i].pow(coeffs[i]))?;
    }
    Ok(out)
}

/// Splits `1 … n` into consecutive clusters of size at most `k`.
pub fn random_clusters<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 1;
    while start <= n {
        let size = rng.gen_range(1..=k.min(n - start + 1));
        out.push(start..start + size);
        start += size;
    }
    out
}

/// A pure braid supported on clusters of at most `k` strands: random pure
/// words inside each cluster, a commutator of random pure words, all
/// conjugated by a random word.
pub fn clustered_sample<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, len: usize) -> BraidWord {
    let mut out = BraidWord::identity(n);
    for cluster in random_clusters(rng, n, k) {
        if cluster.len() < 2 {
            continue;
        }
        let local = random_word(rng, cluster.len(), len);
        let offset = cluster.start as i32 - 1;
        let shifted: Vec<i32> = local.letters().iter().map(|&l| l + l.signum() * offset).collect();
        let w = BraidWord::new(n, shifted).expect("cluster letters in range");
        let order = permutation_of(&w).order();
        out = out.concat(&w.pow(order as i32)).expect("same strand count");
    }
    let a = random_pure_word(rng, n, len);
    let b = random_pure_word(rng, n, len);
    out = out
        .concat(&BraidWord::commutator(&a, &b).expect("same strand count"))
        .expect("same strand count");
    let g = random_word(rng, n, len);
    conjugate(&out, &g).expect("same strand count")
}
