use std::fmt;

use serde::Serialize;

use super::word::{conjugate, is_pure, permutation_of, BraidWord, Permutation};
use crate::error::BraidError;

type Result<T> = std::result::Result<T, BraidError>;

/// Linking numbers `ψ_{i,j}` of a pure braid, one per unordered pair of
/// strands, stored in the order (1,2), (1,3), …, (1,n), (2,3), ….
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinkingMatrix {
    n: usize,
    entries: Vec<i64>,
}

/// Position of the pair `{i, j}` (0-based, `i < j`) in the flat order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl LinkingMatrix {
    pub fn zero(n: usize) -> Self {
        LinkingMatrix {
            n,
            entries: vec![0; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entries in pair order; length `n(n-1)/2`.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `ψ_{i,j}` for strands numbered from 1; symmetric, zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "strand out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => self.entries[pair_index(self.n, i - 1, j - 1)],
            std::cmp::Ordering::Greater => self.entries[pair_index(self.n, j - 1, i - 1)],
        }
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut i64 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        &mut self.entries[pair_index(self.n, a, b)]
    }

    /// Iterates `(i, j, ψ_{i,j})` with `i < j`, 1-based.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n)
            .flat_map(move |i| (i + 1..self.n).map(move |j| (i, j)))
            .zip(&self.entries)
            .map(|((i, j), &v)| (i + 1, j + 1, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Number of strands that strand `j` (1-based) links with.
    pub fn row_support(&self, j: usize) -> usize {
        (1..=self.n).filter(|&i| i != j && self.get(i, j) != 0).count()
    }

    /// The matrix `M'` with `M'(p, q) = M(π(p), π(q))`.
    pub fn pulled_back(&self, perm: &Permutation) -> Self {
        let mut out = LinkingMatrix::zero(self.n);
        for p in 0..self.n {
            for q in p + 1..self.n {
                *out.at_mut(p, q) = self.get(perm.image(p) + 1, perm.image(q) + 1);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LinkingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        LinkingMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.pairs().map(|(i, j, v)| format!("ψ{i},{j}={v}")).collect();
        f.write_str(&cells.join(" "))
    }
}

/// Half the signed crossing count of every pair of strands.
pub fn linking_matrix(b: &BraidWord) -> Result<LinkingMatrix> {
    if !is_pure(b) {
        return Err(BraidError::NotPure);
    }
    let n = b.n();
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut crossings = LinkingMatrix::zero(n);
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let (s, t) = (strand_at[i - 1], strand_at[i]);
        *crossings.at_mut(s, t) += i64::from(l.signum());
        strand_at.swap(i - 1, i);
    }
    for (i, j, v) in crossings.pairs() {
        if v % 2 != 0 {
            return Err(BraidError::OddCrossingParity(i, j));
        }
    }
    Ok(LinkingMatrix {
        n,
        entries: crossings.entries.iter().map(|v| v / 2).collect(),
    })
}

/// A pure braid lies in the commutator subgroup of `P_n` exactly when its
/// image in the abelianization vanishes.
pub fn in_commutator_subgroup(b: &BraidWord) -> Result<bool> {
    Ok(linking_matrix(b)?.is_zero())
}

/// Linking matrix of `g b g⁻¹`, computed both directly and by relabeling
/// the pairs of `b` through the permutation of `g`; errors if they differ.
pub fn conjugation_image(b: &BraidWord, g: &BraidWord) -> Result<LinkingMatrix> {
    let base = linking_matrix(b)?;
    let direct = linking_matrix(&conjugate(b, g)?)?;
    if direct != base.pulled_back(&permutation_of(g)) {
        return Err(BraidError::ConjugationMismatch);
    }
    Ok(direct)
}

/// Whether one strand links nontrivially with at least `k` others.
pub fn hub_property(b: &BraidWord, k: usize) -> Result<bool> {
    if k == 0 || k >= b.n() {
        return Err(BraidError::IndexOutOfRange {
            index: k as i64,
            n: b.n(),
        });
    }
    let m = linking_matrix(b)?;
    Ok((1..=b.n()).any(|j| m.row_support(j) >= k))
}

/// Rank over ℚ of the linking vectors of `words`.
pub fn abelianization_rank(words: &[BraidWord]) -> Result<usize> {
    let Some(first) = words.first() else {
        return Ok(0);
    };
    let mut rows = Vec::with_capacity(words.len());
    for w in words {
        if w.n() != first.n() {
            return Err(BraidError::SizeMismatch(first.n(), w.n()));
        }
        rows.push(
            linking_matrix(w)?
                .entries
                .iter()
                .map(|&v| i128::from(v))
                .collect::<Vec<_>>(),
        );
    }
    Ok(integer_rank(rows))
}

/// Rank of an integer matrix by elimination with rows kept primitive.
fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = num_integer::gcd(pivot[c], f);
            let (a, b) = (pivot[c] / g, f / g);
            for k in c..cols {
                row[k] = a
                    .checked_mul(row[k])
                    .and_then(|x| b.checked_mul(pivot[k]).and_then(|y| x.checked_sub(y)))
                    .expect("linking vectors too large for exact elimination");
            }
            let content = row.iter().fold(0, |acc, &v| num_integer::gcd(acc, v));
            if content > 1 {
                row.iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
    }
    rank
}
