//! Sign sequences: finite words over `{+, 0, -}` and their statistics.
//!
//! For a word `pi = pi_1 ... pi_m` (signs read as +1, 0, -1) define
//! `g_i = -(pi_1 + ... + pi_i)` for `i = 0..m` and
//! `h_i = pi_i + ... + pi_m` for `i = 1..m+1`.  Then
//! `epsilon = max g_i` and `phi = max h_i`; when positive, the *good*
//! position is the smallest `i` with `g_i = epsilon` and the *cogood*
//! position is the largest `i` with `h_i = phi`.  The good position always
//! holds a `-`, the cogood position a `+`, and crystal operators act by
//! removing/adding at exactly these positions.
//!
//! Positions are 1-based throughout, matching the `g_i`/`h_i` indexing.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One letter of a sign sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    /// Arithmetic value: `+` is +1, `0` is 0, `-` is -1.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Zero => 0,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }
}

/// A finite word over `{+, 0, -}`.
///
/// The text encoding uses exactly the characters `+`, `0`, `-`, so that
/// sequences round-trip bit-exactly through the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignSeq {
    entries: Vec<Sign>,
}

/// Partial-sum statistics of a sign sequence.
///
/// `good_pos` is present exactly when `epsilon > 0`, and `cogood_pos`
/// exactly when `phi > 0`; when both are present, `good_pos < cogood_pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignAnalysis {
    pub epsilon: u32,
    pub phi: u32,
    /// 1-based index of the good position, if any.
    pub good_pos: Option<usize>,
    /// 1-based index of the cogood position, if any.
    pub cogood_pos: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignSeqParseError {
    #[error("invalid sign character {0:?} at position {1}; expected '+', '0' or '-'")]
    InvalidChar(char, usize),
}

impl SignSeq {
    pub fn new(entries: Vec<Sign>) -> Self {
        SignSeq { entries }
    }

    pub fn empty() -> Self {
        SignSeq::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.entries
    }

    /// Entry at a 1-based position.
    pub fn get(&self, pos: usize) -> Option<Sign> {
        if pos == 0 {
            return None;
        }
        self.entries.get(pos - 1).copied()
    }

    /// Sum of all entries; equals `phi - epsilon`.
    pub fn total(&self) -> i64 {
        self.entries.iter().map(|s| s.value()).sum()
    }

    /// Compute `epsilon`, `phi` and the good/cogood positions.
    pub fn analyze(&self) -> SignAnalysis {
        let m = self.entries.len();

        // epsilon = max over i in 0..=m of -(pi_1 + ... + pi_i); the good
        // position is the first i attaining the maximum, when positive.
        let mut prefix = 0i64;
        let mut epsilon = 0i64; // g_0 = 0
        let mut good_pos = None;
        for (idx, sign) in self.entries.iter().enumerate() {
            prefix += sign.value();
            let g = -prefix;
            if g > epsilon {
                epsilon = g;
                good_pos = Some(idx + 1);
            }
        }

        // phi = max over i in 1..=m+1 of pi_i + ... + pi_m; the cogood
        // position is the last i attaining the maximum, when positive.
        let mut suffix = 0i64;
        let mut phi = 0i64; // h_{m+1} = 0
        let mut cogood_pos = None;
        for idx in (0..m).rev() {
            suffix += self.entries[idx].value();
            if suffix > phi {
                phi = suffix;
                cogood_pos = Some(idx + 1);
            }
        }

        SignAnalysis {
            epsilon: epsilon as u32,
            phi: phi as u32,
            good_pos,
            cogood_pos,
        }
    }

    /// Fixed point of replacing every segment `+0...0-` by zeros.
    ///
    /// Equivalent to matching each `-` with the nearest preceding unmatched
    /// `+` and zeroing both.  The result has no `+` before any `-`; its `-`
    /// count is `epsilon` (the last `-` sits at the good position) and its
    /// `+` count is `phi` (the first `+` sits at the cogood position).
    pub fn reduce(&self) -> SignSeq {
        let mut out = self.entries.clone();
        let mut open_plus: Vec<usize> = Vec::new();
        for (idx, sign) in self.entries.iter().enumerate() {
            match sign {
                Sign::Plus => open_plus.push(idx),
                Sign::Minus => {
                    if let Some(p) = open_plus.pop() {
                        out[p] = Sign::Zero;
                        out[idx] = Sign::Zero;
                    }
                }
                Sign::Zero => {}
            }
        }
        SignSeq { entries: out }
    }

    /// Entries of `self` followed by entries of `other`.
    pub fn concat(&self, other: &SignSeq) -> SignSeq {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        SignSeq { entries }
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for sign in &self.entries {
            write!(f, "{}", sign.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignSeq {
    type Err = SignSeqParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::with_capacity(s.len());
        for (idx, ch) in s.chars().enumerate() {
            let sign = match ch {
                '+' => Sign::Plus,
                '0' => Sign::Zero,
                '-' => Sign::Minus,
                other => return Err(SignSeqParseError::InvalidChar(other, idx + 1)),
            };
            entries.push(sign);
        }
        Ok(SignSeq { entries })
    }
}

impl FromIterator<Sign> for SignSeq {
    fn from_iter<T: IntoIterator<Item = Sign>>(iter: T) -> Self {
        SignSeq {
            entries: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSeq {
        s.parse().unwrap()
    }

    /// Independent oracle: recompute every g_i and h_i from scratch.
    fn analyze_brute(seq: &SignSeq) -> SignAnalysis {
        let m = seq.len();
        let val = |i: usize| seq.entries()[i - 1].value();

        let g = |i: usize| -> i64 { -(1..=i).map(val).sum::<i64>() };
        let h = |i: usize| -> i64 { (i..=m).map(val).sum::<i64>() };

        let epsilon = (0..=m).map(g).max().unwrap();
        let phi = (1..=m + 1).map(h).max().unwrap();
        let good_pos = if epsilon > 0 {
            Some((0..=m).find(|&i| g(i) == epsilon).unwrap())
        } else {
            None
        };
        let cogood_pos = if phi > 0 {
            Some((1..=m + 1).rev().find(|&i| h(i) == phi).unwrap())
        } else {
            None
        };
        SignAnalysis {
            epsilon: epsilon as u32,
            phi: phi as u32,
            good_pos,
            cogood_pos,
        }
    }

    #[test]
    fn worked_example() {
        let pi = seq("-+0--00++0-0-++0-");
        let a = pi.analyze();
        assert_eq!(a.epsilon, 2);
        assert_eq!(a.phi, 1);
        assert_eq!(a.good_pos, Some(5));
        assert_eq!(a.cogood_pos, Some(14));
        assert_eq!(pi.reduce().to_string(), "-000-00000000+000");
    }

    #[test]
    fn empty_word() {
        let a = SignSeq::empty().analyze();
        assert_eq!(
            a,
            SignAnalysis {
                epsilon: 0,
                phi: 0,
                good_pos: None,
                cogood_pos: None
            }
        );
    }

    #[test]
    fn single_minus() {
        let a = seq("-").analyze();
        assert_eq!(a.epsilon, 1);
        assert_eq!(a.phi, 0);
        assert_eq!(a.good_pos, Some(1));
        assert_eq!(a.cogood_pos, None);
    }

    #[test]
    fn plus_minus_cancels() {
        let a = seq("+-").analyze();
        assert_eq!(a, analyze_brute(&seq("+-")));
        assert_eq!(a.epsilon, 0);
        assert_eq!(a.phi, 0);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(seq("000").reduce().to_string(), "000");
        assert_eq!(seq("+-+-").reduce().to_string(), "0000");
        assert_eq!(seq("++--").reduce().to_string(), "0000");
        assert_eq!(seq("+0-0+").reduce().to_string(), "0000+");
    }

    #[test]
    fn concat_examples() {
        let left = seq("-");
        let right = seq("+");
        let both = left.concat(&right);
        assert_eq!(both.to_string(), "-+");
        let a = both.analyze();
        assert_eq!((a.epsilon, a.phi), (1, 1));

        assert_eq!(SignSeq::empty().concat(&seq("+0-")), seq("+0-"));

        let a = seq("+").concat(&seq("-")).analyze();
        assert_eq!((a.epsilon, a.phi), (0, 0));
    }

    #[test]
    fn analyze_matches_brute_on_all_short_words() {
        // Every word of length <= 7.
        let signs = [Sign::Plus, Sign::Zero, Sign::Minus];
        let mut words = vec![SignSeq::empty()];
        for _ in 0..7 {
            let mut next = Vec::new();
            for w in &words {
                for &s in &signs {
                    let mut entries = w.entries().to_vec();
                    entries.push(s);
                    next.push(SignSeq::new(entries));
                }
            }
            for w in next {
                assert_eq!(w.analyze(), analyze_brute(&w), "word {}", w);
                words.push(w);
            }
        }
    }

    #[test]
    fn reduce_preserves_statistics() {
        let signs = [Sign::Plus, Sign::Zero, Sign::Minus];
        let mut words = vec![SignSeq::empty()];
        for _ in 0..6 {
            words = words
                .iter()
                .flat_map(|w| {
                    signs.iter().map(move |&s| {
                        let mut entries = w.entries().to_vec();
                        entries.push(s);
                        SignSeq::new(entries)
                    })
                })
                .collect();
            for w in &words {
                let red = w.reduce();
                assert_eq!(red.len(), w.len());
                assert_eq!(w.analyze(), red.analyze(), "word {}", w);
                // No + preceding a -.
                let entries = red.entries();
                if let Some(last_plus) = entries.iter().rposition(|&s| s == Sign::Minus) {
                    assert!(entries[..last_plus].iter().all(|&s| s != Sign::Plus));
                }
                // Good position is the last - of the reduction, cogood the first +.
                let a = w.analyze();
                assert_eq!(
                    a.good_pos,
                    entries
                        .iter()
                        .rposition(|&s| s == Sign::Minus)
                        .map(|i| i + 1)
                );
                assert_eq!(
                    a.cogood_pos,
                    entries.iter().position(|&s| s == Sign::Plus).map(|i| i + 1)
                );
                assert_eq!(
                    a.epsilon as usize,
                    entries.iter().filter(|&&s| s == Sign::Minus).count()
                );
                assert_eq!(
                    a.phi as usize,
                    entries.iter().filter(|&&s| s == Sign::Plus).count()
                );
            }
        }
    }

    #[test]
    fn removing_zeros_preserves_statistics() {
        // Dropping any subset of zeros keeps epsilon and phi, and the
        // good/cogood positions still point at the same letters.
        let signs = [Sign::Plus, Sign::Zero, Sign::Minus];
        let mut words = vec![SignSeq::empty()];
        for _ in 0..6 {
            words = words
                .iter()
                .flat_map(|w| {
                    signs.iter().map(move |&s| {
                        let mut entries = w.entries().to_vec();
                        entries.push(s);
                        SignSeq::new(entries)
                    })
                })
                .collect();
        }
        for w in &words {
            let zeros: Vec<usize> = (0..w.len())
                .filter(|&idx| w.entries()[idx] == Sign::Zero)
                .collect();
            for mask in 0..(1u32 << zeros.len()) {
                let dropped: Vec<usize> = zeros
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask & (1 << bit) != 0)
                    .map(|(_, &idx)| idx)
                    .collect();
                let kept: Vec<usize> = (0..w.len()).filter(|idx| !dropped.contains(idx)).collect();
                let shorter = SignSeq::new(kept.iter().map(|&idx| w.entries()[idx]).collect());
                let a = w.analyze();
                let b = shorter.analyze();
                assert_eq!(a.epsilon, b.epsilon, "{} vs {}", w, shorter);
                assert_eq!(a.phi, b.phi);
                // Positions correspond through the index map.
                let mapped = |orig: Option<usize>| {
                    orig.map(|pos| kept.iter().position(|&idx| idx == pos - 1).unwrap() + 1)
                };
                assert_eq!(mapped(a.good_pos), b.good_pos);
                assert_eq!(mapped(a.cogood_pos), b.cogood_pos);
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(
            "+x-".parse::<SignSeq>(),
            Err(SignSeqParseError::InvalidChar('x', 2))
        );
    }

    #[test]
    fn roundtrip_display_parse() {
        for s in ["", "+", "-", "0", "-+0--00++0-0-++0-"] {
            assert_eq!(seq(s).to_string(), s);
        }
    }
}
