//! Arm sequences and their canonical families.
//!
//! An arm sequence for a modulus `n >= 3` is an integer sequence with
//! `t-1 <= A_t <= (n-1)t` and `A_{t+u} in {A_t + A_u, A_t + A_u + 1}`.
//! Only a finite prefix `A_1..A_T` is ever stored; every consumer states the
//! largest index it needs.  The quotients `A_t / t` of any infinite
//! extension converge to some `y in [1, n-1]`, and for rational `y` exactly
//! two sequences tend to `y`:
//!
//! ```text
//! A^{y,+}_t = floor(y t),        A^{y,-}_t = ceil(y t - 1).
//! ```
//!
//! The extremes `(0, 1, 2, ...)` and `(n-1, 2n-2, ...)` are `A^{1,-}` and
//! `A^{n-1,+}`.  A broadened rule `0 <= A_t <= nt - 1` is accepted behind an
//! explicit flag; the crystal theory survives it but distinctness of the
//! models does not, so the strict rule is the default.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// An exact fraction with positive denominator, kept reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(value: i64) -> Self {
        Ratio { num: value, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn floor_times(&self, t: i64) -> i64 {
        (self.num * t).div_euclid(self.den)
    }

    pub fn ceil_times(&self, t: i64) -> i64 {
        (self.num * t + self.den - 1).div_euclid(self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Which of the two canonical sequences tending to a rational `y` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalSign {
    Plus,
    Minus,
}

/// Classification against the two extreme sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremity {
    None,
    /// `A_t = t - 1` throughout the prefix.
    Lower,
    /// `A_t = (n-1) t` throughout the prefix.
    Upper,
}

/// Interval of possible limits `y` for extensions of a validated prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitInterval {
    pub lo: Ratio,
    pub hi: Ratio,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArmSequenceError {
    #[error("n must be at least 3, got {0}")]
    BadModulus(u32),
    #[error("arm sequence prefix must be nonempty")]
    EmptyPrefix,
    #[error("A_{t} = {value} outside the range {lo}..={hi}")]
    RangeViolation {
        t: usize,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error(
        "additivity violated at (t,u) = ({t},{u}): A_(t+u) = {a_sum} but A_t + A_u = {parts}, so A_(t+u) must be {parts} or one more"
    )]
    AdditivityViolation {
        t: usize,
        u: usize,
        a_sum: i64,
        parts: i64,
    },
    #[error("y = {0} outside [1, {1}]")]
    LimitOutOfRange(Ratio, i64),
    #[error("invalid arm sequence spec {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("alias {0:?} requires the broadened rule; pass --broad")]
    NeedsBroad(String),
}

/// A validated arm-sequence prefix `A_1..A_T` for a modulus `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArmSequence {
    n: u32,
    prefix: Vec<i64>,
    broad: bool,
}

impl ArmSequence {
    /// Validate a prefix under the strict rule `t-1 <= A_t <= (n-1)t`.
    pub fn new(n: u32, prefix: Vec<i64>) -> Result<Self, ArmSequenceError> {
        Self::validate(n, prefix, false)
    }

    /// Validate a prefix under the broadened rule `0 <= A_t <= nt - 1`.
    pub fn new_broad(n: u32, prefix: Vec<i64>) -> Result<Self, ArmSequenceError> {
        Self::validate(n, prefix, true)
    }

    fn validate(n: u32, prefix: Vec<i64>, broad: bool) -> Result<Self, ArmSequenceError> {
        if n < 3 {
            return Err(ArmSequenceError::BadModulus(n));
        }
        if prefix.is_empty() {
            return Err(ArmSequenceError::EmptyPrefix);
        }
        for (idx, &value) in prefix.iter().enumerate() {
            let t = (idx + 1) as i64;
            let (lo, hi) = if broad {
                (0, n as i64 * t - 1)
            } else {
                (t - 1, (n as i64 - 1) * t)
            };
            if value < lo || value > hi {
                return Err(ArmSequenceError::RangeViolation {
                    t: idx + 1,
                    value,
                    lo,
                    hi,
                });
            }
        }
        for t in 1..=prefix.len() {
            for u in t..=prefix.len() {
                if t + u > prefix.len() {
                    break;
                }
                let parts = prefix[t - 1] + prefix[u - 1];
                let a_sum = prefix[t + u - 1];
                if a_sum != parts && a_sum != parts + 1 {
                    return Err(ArmSequenceError::AdditivityViolation { t, u, a_sum, parts });
                }
            }
        }
        Ok(ArmSequence { n, prefix, broad })
    }

    /// Prefix of `A^{y,+}` (floor) or `A^{y,-}` (ceiling minus one).
    pub fn canonical(
        n: u32,
        y: Ratio,
        sign: CanonicalSign,
        len: usize,
    ) -> Result<Self, ArmSequenceError> {
        if n < 3 {
            return Err(ArmSequenceError::BadModulus(n));
        }
        if y < Ratio::integer(1) || y > Ratio::integer(n as i64 - 1) {
            return Err(ArmSequenceError::LimitOutOfRange(y, n as i64 - 1));
        }
        let len = len.max(1);
        let prefix = (1..=len as i64)
            .map(|t| match sign {
                CanonicalSign::Plus => y.floor_times(t),
                CanonicalSign::Minus => y.ceil_times(t) - 1,
            })
            .collect();
        Self::new(n, prefix)
    }

    /// The ladder-crystal sequence `A^{1,+} = (1, 2, 3, ...)`.
    pub fn berg(n: u32, len: usize) -> Result<Self, ArmSequenceError> {
        Self::canonical(n, Ratio::integer(1), CanonicalSign::Plus, len)
    }

    /// The upper extreme `((n-1)t)`, whose model is the restricted one.
    pub fn restricted(n: u32, len: usize) -> Result<Self, ArmSequenceError> {
        Self::canonical(n, Ratio::integer(n as i64 - 1), CanonicalSign::Plus, len)
    }

    /// The lower extreme `A^{1,-} = (0, 1, 2, ...)`.
    pub fn lower_extreme(n: u32, len: usize) -> Result<Self, ArmSequenceError> {
        Self::canonical(n, Ratio::integer(1), CanonicalSign::Minus, len)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn is_broad(&self) -> bool {
        self.broad
    }

    /// `A_t`, reading `A_0` as 0; `None` beyond the stored prefix.
    pub fn get(&self, t: usize) -> Option<i64> {
        if t == 0 {
            Some(0)
        } else {
            self.prefix.get(t - 1).copied()
        }
    }

    /// Tight interval containing the limit `y` of every infinite extension:
    /// `lo = max A_t/t`, `hi = min (A_t + 1)/t`, clamped to `[1, n-1]`.
    pub fn limit_interval(&self) -> LimitInterval {
        let mut lo = Ratio::integer(1);
        let mut hi = Ratio::integer(self.n as i64 - 1);
        for (idx, &value) in self.prefix.iter().enumerate() {
            let t = (idx + 1) as i64;
            lo = lo.max(Ratio::new(value, t));
            hi = hi.min(Ratio::new(value + 1, t));
        }
        LimitInterval { lo, hi }
    }

    pub fn is_extreme(&self) -> Extremity {
        let lower = self
            .prefix
            .iter()
            .enumerate()
            .all(|(idx, &v)| v == idx as i64);
        if lower {
            return Extremity::Lower;
        }
        let upper = self
            .prefix
            .iter()
            .enumerate()
            .all(|(idx, &v)| v == (self.n as i64 - 1) * (idx as i64 + 1));
        if upper {
            return Extremity::Upper;
        }
        Extremity::None
    }

    /// Parse the CLI spec grammar.
    ///
    /// Accepted forms: `prefix:1,3,4`, `canonical:y=3/2,sign=+,len=12`, and
    /// the aliases `berg`, `restricted`, `colregular` (the last one only
    /// under the broadened rule).  Aliases and `canonical` specs without an
    /// explicit length are materialized with `alias_len` terms.
    pub fn parse_spec(
        n: u32,
        text: &str,
        broad: bool,
        alias_len: usize,
    ) -> Result<Self, ArmSequenceError> {
        let parse_err = |reason: &str| ArmSequenceError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let alias_len = alias_len.max(1);
        match text {
            "berg" => return Self::berg(n, alias_len),
            "restricted" => return Self::restricted(n, alias_len),
            "colregular" => {
                if !broad {
                    return Err(ArmSequenceError::NeedsBroad("colregular".into()));
                }
                let prefix = (0..alias_len as i64).collect();
                return Self::new_broad(n, prefix);
            }
            _ => {}
        }
        if let Some(rest) = text.strip_prefix("prefix:") {
            let mut prefix = Vec::new();
            for piece in rest.split(',') {
                prefix.push(
                    piece
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| parse_err(&format!("bad integer {:?}", piece)))?,
                );
            }
            return if broad {
                Self::new_broad(n, prefix)
            } else {
                Self::new(n, prefix)
            };
        }
        if let Some(rest) = text.strip_prefix("canonical:") {
            let mut y = None;
            let mut sign = None;
            let mut len = alias_len;
            for piece in rest.split(',') {
                let (key, value) = piece
                    .split_once('=')
                    .ok_or_else(|| parse_err(&format!("expected key=value, got {:?}", piece)))?;
                match key.trim() {
                    "y" => {
                        y = Some(
                            parse_ratio(value.trim())
                                .ok_or_else(|| parse_err(&format!("bad rational {:?}", value)))?,
                        )
                    }
                    "sign" => {
                        sign = Some(match value.trim() {
                            "+" => CanonicalSign::Plus,
                            "-" => CanonicalSign::Minus,
                            other => {
                                return Err(parse_err(&format!("bad sign {:?}", other)));
                            }
                        })
                    }
                    "len" => {
                        len = value
                            .trim()
                            .parse()
                            .map_err(|_| parse_err(&format!("bad length {:?}", value)))?
                    }
                    other => return Err(parse_err(&format!("unknown key {:?}", other))),
                }
            }
            let y = y.ok_or_else(|| parse_err("missing y="))?;
            let sign = sign.ok_or_else(|| parse_err("missing sign="))?;
            return Self::canonical(n, y, sign, len);
        }
        Err(parse_err(
            "expected prefix:..., canonical:..., berg, restricted or colregular",
        ))
    }
}

fn parse_ratio(s: &str) -> Option<Ratio> {
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        Some(Ratio::new(num, den))
    } else {
        s.trim().parse::<i64>().ok().map(Ratio::integer)
    }
}

impl fmt::Display for ArmSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[n={}](", self.n)?;
        for (i, v) in self.prefix.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(ArmSequence::new(3, vec![1, 2, 3, 4]).is_ok());
        assert!(ArmSequence::new(3, vec![0, 1, 2]).is_ok());
        // A_2 must lie in {2, 3}.
        match ArmSequence::new(3, vec![1, 4]) {
            Err(ArmSequenceError::AdditivityViolation { t, u, a_sum, parts }) => {
                assert_eq!((t, u, a_sum, parts), (1, 1, 4, 2));
            }
            other => panic!("expected additivity violation, got {:?}", other),
        }
        assert!(matches!(
            ArmSequence::new(3, vec![5]),
            Err(ArmSequenceError::RangeViolation { .. })
        ));
        assert!(matches!(
            ArmSequence::new(2, vec![1]),
            Err(ArmSequenceError::BadModulus(2))
        ));
        assert!(matches!(
            ArmSequence::new(3, vec![]),
            Err(ArmSequenceError::EmptyPrefix)
        ));
    }

    #[test]
    fn broadened_rule() {
        assert!(ArmSequence::new(3, vec![0, 0]).is_err());
        let a = ArmSequence::new_broad(3, vec![0, 0]).unwrap();
        assert!(a.is_broad());
        assert!(ArmSequence::new(3, vec![2, 5]).is_err());
        assert!(ArmSequence::new_broad(3, vec![2, 5]).is_ok());
        assert!(matches!(
            ArmSequence::new_broad(3, vec![2, 7]),
            Err(ArmSequenceError::RangeViolation { .. })
        ));
    }

    #[test]
    fn canonical_families() {
        let berg = ArmSequence::berg(3, 4).unwrap();
        assert_eq!(berg.prefix(), &[1, 2, 3, 4]);
        let lower = ArmSequence::lower_extreme(3, 4).unwrap();
        assert_eq!(lower.prefix(), &[0, 1, 2, 3]);
        let a = ArmSequence::canonical(4, Ratio::new(3, 2), CanonicalSign::Plus, 4).unwrap();
        assert_eq!(a.prefix(), &[1, 3, 4, 6]);
        let b = ArmSequence::canonical(4, Ratio::new(3, 2), CanonicalSign::Minus, 4).unwrap();
        assert_eq!(b.prefix(), &[1, 2, 4, 5]);
        assert!(matches!(
            ArmSequence::canonical(3, Ratio::new(5, 2), CanonicalSign::Plus, 3),
            Err(ArmSequenceError::LimitOutOfRange(..))
        ));
    }

    #[test]
    fn canonical_always_validates_and_agrees_off_integer_multiples() {
        for n in [3u32, 4, 5] {
            for den in 1..=6i64 {
                for num in den..=(n as i64 - 1) * den {
                    let y = Ratio::new(num, den);
                    let plus = ArmSequence::canonical(n, y, CanonicalSign::Plus, 12).unwrap();
                    let minus = ArmSequence::canonical(n, y, CanonicalSign::Minus, 12).unwrap();
                    for t in 1..=12usize {
                        let yt_integral = (y.num() * t as i64) % y.den() == 0;
                        if yt_integral {
                            assert_eq!(
                                plus.get(t).unwrap(),
                                minus.get(t).unwrap() + 1,
                                "n={} y={} t={}",
                                n,
                                y,
                                t
                            );
                        } else {
                            assert_eq!(plus.get(t), minus.get(t));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn limit_intervals() {
        let a = ArmSequence::new(3, vec![1, 2, 3]).unwrap();
        let li = a.limit_interval();
        assert_eq!(li.lo, Ratio::integer(1));
        assert_eq!(li.hi, Ratio::new(4, 3));

        let a = ArmSequence::new(3, vec![2, 4]).unwrap();
        let li = a.limit_interval();
        assert_eq!((li.lo, li.hi), (Ratio::integer(2), Ratio::integer(2)));

        let a = ArmSequence::new(4, vec![1, 3]).unwrap();
        let li = a.limit_interval();
        assert_eq!((li.lo, li.hi), (Ratio::new(3, 2), Ratio::integer(2)));
    }

    #[test]
    fn limit_interval_is_nonempty_and_contains_canonical_y() {
        for n in [3u32, 4] {
            for den in 1..=4i64 {
                for num in den..=(n as i64 - 1) * den {
                    let y = Ratio::new(num, den);
                    for sign in [CanonicalSign::Plus, CanonicalSign::Minus] {
                        let a = ArmSequence::canonical(n, y, sign, 10).unwrap();
                        let li = a.limit_interval();
                        assert!(li.lo <= li.hi);
                        assert!(li.lo <= y && y <= li.hi, "y={} li={:?}", y, li);
                    }
                }
            }
        }
    }

    #[test]
    fn cauchy_property_of_quotients() {
        // |A_t/t - A_u/u| < 1/min(t,u) for every valid prefix tested.
        for prefix in [
            vec![1, 2, 3, 4, 5],
            vec![1, 3, 4, 6, 7],
            vec![2, 4, 6, 8, 10],
        ] {
            let a = ArmSequence::new(3, prefix).unwrap();
            for t in 1..=a.len() as i64 {
                for u in 1..=a.len() as i64 {
                    let at = a.get(t as usize).unwrap();
                    let au = a.get(u as usize).unwrap();
                    let lhs = (at * u - au * t).abs();
                    // |A_t/t - A_u/u| < 1/min(t,u) times t*u on both sides.
                    assert!(lhs * t.min(u) < t * u);
                }
            }
        }
    }

    #[test]
    fn extremes() {
        assert_eq!(
            ArmSequence::new(3, vec![2, 4, 6]).unwrap().is_extreme(),
            Extremity::Upper
        );
        assert_eq!(
            ArmSequence::new(3, vec![0, 1]).unwrap().is_extreme(),
            Extremity::Lower
        );
        assert_eq!(
            ArmSequence::new(3, vec![1, 2]).unwrap().is_extreme(),
            Extremity::None
        );
    }

    #[test]
    fn nonextreme_prefixes_satisfy_tight_bounds() {
        for n in [3u32, 4] {
            for den in 1..=4i64 {
                for num in den..=(n as i64 - 1) * den {
                    let y = Ratio::new(num, den);
                    for sign in [CanonicalSign::Plus, CanonicalSign::Minus] {
                        let a = ArmSequence::canonical(n, y, sign, 10).unwrap();
                        if a.is_extreme() != Extremity::None {
                            continue;
                        }
                        for t in 1..=a.len() as i64 {
                            let at = a.get(t as usize).unwrap();
                            assert!(t <= at && at < (n as i64 - 1) * t);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spec_grammar() {
        let a = ArmSequence::parse_spec(3, "prefix:1,3,4", false, 4).unwrap();
        assert_eq!(a.prefix(), &[1, 3, 4]);
        let a = ArmSequence::parse_spec(4, "canonical:y=3/2,sign=+,len=4", false, 2).unwrap();
        assert_eq!(a.prefix(), &[1, 3, 4, 6]);
        let a = ArmSequence::parse_spec(3, "berg", false, 5).unwrap();
        assert_eq!(a.prefix(), &[1, 2, 3, 4, 5]);
        let a = ArmSequence::parse_spec(3, "restricted", false, 3).unwrap();
        assert_eq!(a.prefix(), &[2, 4, 6]);
        assert!(matches!(
            ArmSequence::parse_spec(3, "colregular", false, 3),
            Err(ArmSequenceError::NeedsBroad(_))
        ));
        let a = ArmSequence::parse_spec(3, "colregular", true, 3).unwrap();
        assert_eq!(a.prefix(), &[0, 1, 2]);
        assert!(ArmSequence::parse_spec(3, "nonsense", false, 3).is_err());
    }

    #[test]
    fn ratio_ordering_and_display() {
        assert!(Ratio::new(3, 2) < Ratio::integer(2));
        assert_eq!(Ratio::new(4, 2), Ratio::integer(2));
        assert_eq!(Ratio::new(3, 2).to_string(), "3/2");
        assert_eq!(Ratio::new(-3, -2).to_string(), "3/2");
        assert_eq!(Ratio::integer(7).to_string(), "7");
    }
}
