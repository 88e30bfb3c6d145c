use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::BraidError;

type Result<T> = std::result::Result<T, BraidError>;

/// A word in the Artin generators of `B_n`. Letter `i > 0` is `σ_i`,
/// letter `-i` is `σ_i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::IndexOutOfRange { index: 0, n });
        }
        for &l in &letters {
            let i = i64::from(l).abs();
            if i == 0 || i as usize >= n {
                return Err(BraidError::IndexOutOfRange { index: l.into(), n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord {
            n: n.max(1),
            letters: Vec::new(),
        }
    }

    /// Parses whitespace- or comma-separated letters such as `s1 s2^-1 s3^2`.
    /// `e` and the empty string denote the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            if tok == "e" || tok == "1" {
                continue;
            }
            let body = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('σ'))
                .ok_or_else(|| BraidError::Parse(format!("unexpected token {tok:?}")))?;
            let (index, power) = match body.split_once('^') {
                Some((i, p)) => (i, p),
                None => (body, "1"),
            };
            let index: i32 = index
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad generator index in {tok:?}")))?;
            let power: i32 = power
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad exponent in {tok:?}")))?;
            let letter = if power < 0 { -index } else { index };
            letters.extend(std::iter::repeat_n(letter, power.unsigned_abs() as usize));
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(BraidError::SizeMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// `self^k`; negative powers repeat the inverse.
    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// The commutator `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        a.concat(b)?.concat(&a.inverse())?.concat(&b.inverse())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *l < 0 {
                write!(f, "s{}^-1", -l)?;
            } else {
                write!(f, "s{l}")?;
            }
        }
        Ok(())
    }
}

/// A permutation of strand positions, stored 0-based: `image(p)` is where
/// the strand that starts at `p` ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn image(&self, p: usize) -> usize {
        self.0[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// Least `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut order = 1;
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.0[p];
                len += 1;
            }
            if len > 0 {
                order = num_integer::lcm(order, len);
            }
        }
        order
    }

    /// Nontrivial cycles, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.0[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// The image of `b` in the symmetric group.
pub fn permutation_of(b: &BraidWord) -> Permutation {
    // strand_at[pos] = starting position of the strand currently at pos
    let mut strand_at: Vec<usize> = (0..b.n).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize;
        strand_at.swap(i - 1, i);
    }
    let mut images = vec![0; b.n];
    for (pos, &s) in strand_at.iter().enumerate() {
        images[s] = pos;
    }
    Permutation(images)
}

pub fn is_pure(b: &BraidWord) -> bool {
    permutation_of(b).is_identity()
}

/// `g b g⁻¹`.
pub fn conjugate(b: &BraidWord, g: &BraidWord) -> Result<BraidWord> {
    if b.n != g.n {
        return Err(BraidError::SizeMismatch(b.n, g.n));
    }
    g.concat(b)?.concat(&g.inverse())
}

/// The pure braid in which strand `l` travels around all strands to its
/// right and comes back: `σ_l ⋯ σ_{n-1} σ_{n-1} ⋯ σ_l`.
pub fn concentric_generator(n: usize, l: usize) -> Result<BraidWord> {
    if l == 0 || l >= n {
        return Err(BraidError::IndexOutOfRange { index: l as i64, n });
    }
    let up = (l..n).map(|i| i as i32);
    let down = (l..n).rev().map(|i| i as i32);
    BraidWord::new(n, up.chain(down).collect())
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `n:word`, e.g. `3:s1 s2^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, word) = s
            .split_once(':')
            .ok_or_else(|| BraidError::Parse("expected `n:word`".into()))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad strand count {n:?}")))?;
        Self::parse(n, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let b = w(4, "s1 s2^-1, s3^2");
        assert_eq!(b.letters(), &[1, -2, 3, 3]);
        assert_eq!(b.to_string(), "s1 s2^-1 s3 s3");
        assert_eq!(w(4, &b.to_string()), b);
        assert_eq!(w(3, "").to_string(), "e");
        assert!(w(3, "e").is_empty());
        assert_eq!("3:s1 s2".parse::<BraidWord>().unwrap(), w(3, "s1 s2"));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            BraidWord::parse(3, "s3"),
            Err(BraidError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse(3, "s0"),
            Err(BraidError::IndexOutOfRange { .. })
        ));
        assert!(matches!(BraidWord::parse(3, "x1"), Err(BraidError::Parse(_))));
        assert!(matches!(BraidWord::parse(3, "s1^a"), Err(BraidError::Parse(_))));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(permutation_of(&w(2, "s1")).images(), &[1, 0]);
        assert!(is_pure(&w(2, "s1 s1")));
        assert!(!is_pure(&w(2, "s1")));
        let p = permutation_of(&w(3, "s1 s2"));
        assert_eq!(p.cycles().len(), 1);
        assert_eq!(p.cycles()[0].len(), 3);
        assert_eq!(p.order(), 3);
        let a = w(3, "s1 s1");
        let b = w(3, "s2 s2");
        assert!(is_pure(&BraidWord::commutator(&a, &b).unwrap()));
    }

    #[test]
    fn strand_starting_left_of_s1_s2_ends_right() {
        // σ₁σ₂: the strand at position 1 moves to 2, then to 3
        let p = permutation_of(&w(3, "s1 s2"));
        assert_eq!(p.image(0), 2);
        assert_eq!(p.to_string(), "(1 3 2)");
    }

    #[test]
    fn conjugate_shape() {
        let b = w(3, "s1 s1");
        let g = w(3, "s2 s1^-1");
        assert_eq!(conjugate(&b, &BraidWord::identity(3)).unwrap(), b);
        let c = conjugate(&b, &g).unwrap();
        assert_eq!(c.len(), 2 * g.len() + b.len());
        assert_eq!(c.to_string(), "s2 s1^-1 s1 s1 s1 s2^-1");
        assert!(matches!(
            conjugate(&b, &w(4, "s3")),
            Err(BraidError::SizeMismatch(3, 4))
        ));
    }

    #[test]
    fn concentric_words() {
        assert_eq!(concentric_generator(2, 1).unwrap(), w(2, "s1 s1"));
        assert_eq!(concentric_generator(4, 2).unwrap(), w(4, "s2 s3 s3 s2"));
        assert!(concentric_generator(3, 3).is_err());
        assert!(concentric_generator(3, 0).is_err());
        for n in 2..8 {
            for l in 1..n {
                assert!(is_pure(&concentric_generator(n, l).unwrap()));
            }
        }
    }
}
