//! Braid words, their closures, and the factorization fed to both the
//! Seifert-surface and surgery constructions.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A generator `σ_index^{±1}`. Indices are 1-based as in the usual notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, sign: Sign::Positive }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, sign: Sign::Negative }
    }

    /// Signed-integer token: `k` for `σ_k`, `-k` for `σ_k^{-1}`.
    pub fn token(self) -> i64 {
        self.sign.value() * self.index as i64
    }

    pub fn from_token(token: i64) -> Result<Self> {
        match token {
            0 => Err(Error::ZeroGenerator),
            k if k > 0 => Ok(Letter::pos(k as usize)),
            k => Ok(Letter::neg(k.unsigned_abs() as usize)),
        }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// A word in the standard generators of the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            if bad.index == 0 {
                return Err(Error::ZeroGenerator);
            }
            return Err(Error::IndexOutOfRange {
                index: bad.index,
                strands,
                needed: bad.index + 1,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed tokens, inferring the strand count.
    pub fn from_tokens(tokens: &[i64]) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|&t| Letter::from_token(t))
            .collect::<Result<Vec<_>>>()?;
        let strands = letters.iter().map(|l| l.index + 1).max().unwrap_or(1);
        BraidWord::new(strands, letters)
    }

    pub fn unknot() -> Self {
        BraidWord { strands: 1, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Space-separated signed tokens, the same format [`parse_braid`] reads.
    pub fn to_text(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.token().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    /// Self-linking number of the transverse closure: writhe minus strands.
    pub fn self_linking(&self) -> i64 {
        self.writhe() - self.strands as i64
    }

    /// `perm[s]` is the final position of the strand starting at position `s`
    /// (0-based), reading letters left to right.
    pub fn closure_permutation(&self) -> Vec<usize> {
        // at[pos] = strand currently occupying pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.closure_permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                s = perm[s];
            }
        }
        cycles
    }

    /// Appends `σ_m` on `m + 1` strands.
    pub fn positive_stabilize(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::pos(self.strands));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Appends `σ_m^{-1}` on `m + 1` strands. Changes the transverse type.
    pub fn negative_stabilize(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::neg(self.strands));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// `g w g^{-1}`.
    pub fn conjugate(&self, g: Letter) -> Result<BraidWord> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(g.inverse());
        BraidWord::new(self.strands, letters)
    }

    /// Rewrites `σ_i σ_j σ_i` as `σ_j σ_i σ_j` (|i - j| = 1, all letters of
    /// the same sign) starting at the 1-based `position`.
    pub fn apply_braid_relation(&self, position: usize) -> Result<BraidWord> {
        let start = position.checked_sub(1).ok_or(Error::RelationAbsent { position })?;
        let window = self
            .letters
            .get(start..start + 3)
            .ok_or(Error::RelationAbsent { position })?;
        let (a, b, c) = (window[0], window[1], window[2]);
        let same_sign = a.sign == b.sign && b.sign == c.sign;
        if !same_sign || a != c || a.index.abs_diff(b.index) != 1 {
            return Err(Error::RelationAbsent { position });
        }
        let mut letters = self.letters.clone();
        letters[start] = b;
        letters[start + 1] = a;
        letters[start + 2] = b;
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Swaps two far-apart letters (|i - j| >= 2) at 1-based `position`.
    pub fn commute(&self, position: usize) -> Result<BraidWord> {
        let start = position.checked_sub(1).ok_or(Error::RelationAbsent { position })?;
        let pair = self
            .letters
            .get(start..start + 2)
            .ok_or(Error::RelationAbsent { position })?;
        if pair[0].index.abs_diff(pair[1].index) < 2 {
            return Err(Error::RelationAbsent { position });
        }
        let mut letters = self.letters.clone();
        letters.swap(start, start + 1);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Inserts `σ_i σ_i^{-1}` before the 0-based offset `at` (clamped to the end).
    pub fn insert_cancelling_pair(&self, at: usize, letter: Letter) -> Result<BraidWord> {
        let at = at.min(self.letters.len());
        let mut letters = self.letters.clone();
        letters.splice(at..at, [letter, letter.inverse()]);
        BraidWord::new(self.strands, letters)
    }

    /// Positions (1-based) where [`BraidWord::apply_braid_relation`] applies.
    pub fn relation_sites(&self) -> Vec<usize> {
        (1..=self.letters.len().saturating_sub(2))
            .filter(|&p| self.apply_braid_relation(p).is_ok())
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] on {} strands", self.to_text(), self.strands)
    }
}

/// Parses whitespace-separated nonzero integers; `k` encodes `σ_|k|^sign(k)`.
/// Without an override the strand count is `max |k| + 1` (1 for empty input).
pub fn parse_braid(text: &str, strands_override: Option<usize>) -> Result<BraidWord> {
    let tokens = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::InvalidToken { token: tok.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    let letters = tokens
        .into_iter()
        .map(Letter::from_token)
        .collect::<Result<Vec<_>>>()?;
    let strands = match strands_override {
        Some(m) => m,
        None => letters.iter().map(|l| l.index + 1).max().unwrap_or(1),
    };
    BraidWord::new(strands, letters)
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// The word `(σ_1^{-1} ⋯ σ_{m-1}^{-1}) α`, optionally freely reduced.
///
/// Each letter later becomes one 1-handle of the canonical Seifert surface
/// and one `(p-1)`-component block of the surgery diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    strands: usize,
    letters: Vec<Letter>,
    reduced: bool,
}

impl Factorization {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn e_plus(&self) -> usize {
        self.letters.iter().filter(|l| l.sign == Sign::Positive).count()
    }

    pub fn e_minus(&self) -> usize {
        self.letters.iter().filter(|l| l.sign == Sign::Negative).count()
    }

    /// The factorization viewed as a braid word on the same strands.
    pub fn as_word(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.clone() }
    }
}

pub fn factorization_one(w: &BraidWord, reduce: bool) -> Factorization {
    let mut letters: Vec<Letter> = (1..w.strands()).map(Letter::neg).collect();
    letters.extend_from_slice(w.letters());
    if reduce {
        letters = free_reduce(&letters);
    }
    Factorization { strands: w.strands(), letters, reduced: reduce }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        parse_braid(text, None).unwrap()
    }

    #[test]
    fn parses_signed_tokens() {
        let t = w("1 1 1");
        assert_eq!(t.strands(), 2);
        assert_eq!(t.letters(), &[Letter::pos(1); 3]);

        let fig8 = w("1 -2 1 -2");
        assert_eq!(fig8.strands(), 3);
        assert_eq!(fig8.letters()[1], Letter::neg(2));

        let unknot = parse_braid("", Some(1)).unwrap();
        assert_eq!(unknot.strands(), 1);
        assert!(unknot.is_empty());
        assert_eq!(parse_braid("   ", None).unwrap().strands(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_braid("1 0 2", None), Err(Error::ZeroGenerator));
        assert!(matches!(parse_braid("1 x", None), Err(Error::InvalidToken { .. })));
        assert!(matches!(parse_braid("1.5", None), Err(Error::InvalidToken { .. })));
        assert!(matches!(
            parse_braid("1 3", Some(3)),
            Err(Error::IndexOutOfRange { index: 3, strands: 3, needed: 4 })
        ));
        assert_eq!(parse_braid("", Some(0)), Err(Error::NoStrands));
    }

    #[test]
    fn strand_override_adds_trivial_strands() {
        let b = parse_braid("1 1 1", Some(4)).unwrap();
        assert_eq!(b.strands(), 4);
        assert_eq!(b.closure_components(), 3);
        assert_eq!(b.self_linking(), -1);
    }

    #[test]
    fn writhe_and_self_linking() {
        assert_eq!(w("1 1 1").writhe(), 3);
        assert_eq!(BraidWord::unknot().writhe(), 0);
        assert_eq!(w("1 -2 1 -2").writhe(), 0);

        assert_eq!(w("1 1 1").self_linking(), 1);
        assert_eq!(w("1").self_linking(), -1);
        assert_eq!(w("1 -2 1 -2").self_linking(), -3);
    }

    #[test]
    fn closure_data() {
        assert_eq!(w("1 1 1").closure_permutation(), vec![1, 0]);
        assert_eq!(w("1 1 1").closure_components(), 1);
        assert_eq!(w("1 1").closure_permutation(), vec![0, 1]);
        assert_eq!(w("1 1").closure_components(), 2);
        assert_eq!(BraidWord::unknot().closure_components(), 1);
        assert_eq!(w("1 2").closure_permutation(), vec![2, 0, 1]);
        assert_eq!(w("1 -2 1 -2").closure_components(), 1);
    }

    #[test]
    fn factorization_literal_and_reduced() {
        let t = w("1 1 1");
        let lit = factorization_one(&t, false);
        assert_eq!(
            lit.letters(),
            &[Letter::neg(1), Letter::pos(1), Letter::pos(1), Letter::pos(1)]
        );
        assert_eq!(lit.len(), 4);
        assert_eq!((lit.e_plus(), lit.e_minus()), (3, 1));

        let red = factorization_one(&t, true);
        assert_eq!(red.letters(), &[Letter::pos(1), Letter::pos(1)]);

        assert!(factorization_one(&w("1"), true).is_empty());

        let fig8 = factorization_one(&w("1 -2 1 -2"), false);
        assert_eq!(fig8.len(), 6);
        assert_eq!(&fig8.letters()[..2], &[Letter::neg(1), Letter::neg(2)]);
    }

    #[test]
    fn free_reduce_reaches_fixed_point() {
        let letters = [Letter::pos(1), Letter::pos(2), Letter::neg(2), Letter::neg(1), Letter::pos(3)];
        assert_eq!(free_reduce(&letters), vec![Letter::pos(3)]);
    }

    #[test]
    fn moves() {
        let t = w("1 1 1");
        let s = t.positive_stabilize();
        assert_eq!(s.strands(), 3);
        assert_eq!(s.to_text(), "1 1 1 2");

        let c = t.conjugate(Letter::pos(1)).unwrap();
        assert_eq!(c.to_text(), "1 1 1 1 -1");
        assert!(t.conjugate(Letter::pos(2)).is_err());

        assert_eq!(w("1 2 1").apply_braid_relation(1).unwrap().to_text(), "2 1 2");
        assert_eq!(w("-2 -1 -2").apply_braid_relation(1).unwrap().to_text(), "-1 -2 -1");
        assert_eq!(
            w("1 2 -1").apply_braid_relation(1),
            Err(Error::RelationAbsent { position: 1 })
        );
        assert!(w("1 2 1").apply_braid_relation(2).is_err());
        assert!(w("1 2 1").apply_braid_relation(0).is_err());

        assert_eq!(w("1 3").commute(1).unwrap().to_text(), "3 1");
        assert!(w("1 2").commute(1).is_err());

        let ins = t.insert_cancelling_pair(1, Letter::neg(1)).unwrap();
        assert_eq!(ins.to_text(), "1 -1 1 1 1");
    }

    #[test]
    fn stabilization_preserves_invariants() {
        for text in ["1 1 1", "1 -2 1 -2", "1 1", "-1 -1 2"] {
            let b = w(text);
            let s = b.positive_stabilize();
            assert_eq!(s.self_linking(), b.self_linking());
            assert_eq!(s.closure_components(), b.closure_components());
            assert_eq!(b.negative_stabilize().self_linking(), b.self_linking() - 2);
        }
    }
}
