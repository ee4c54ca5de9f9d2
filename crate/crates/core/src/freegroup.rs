//! Words in the free group `F_n` on generators `x1..xn`.
//!
//! A [`Word`] is always stored freely reduced, so two words are equal exactly
//! when their letter sequences (and ranks) are equal.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the unreduced length of a parsed word.
pub const DEFAULT_MAX_WORD_LEN: usize = 1 << 20;

/// A generator or its inverse. Stored as a nonzero signed index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(i32);

impl Letter {
    /// `x_generator^sign`. Panics if `generator` is zero or does not fit.
    pub fn new(generator: u32, sign: i32) -> Self {
        assert!(generator >= 1, "generator indices are 1-based");
        let g = i32::try_from(generator).expect("generator index too large");
        Letter(if sign < 0 { -g } else { g })
    }

    pub fn pos(generator: u32) -> Self {
        Letter::new(generator, 1)
    }

    pub fn neg(generator: u32) -> Self {
        Letter::new(generator, -1)
    }

    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

/// A freely reduced word of a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(generator: u32, rank: usize) -> Result<Self> {
        Word::reduce([Letter::pos(generator)], rank)
    }

    /// Freely reduce a raw letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>, rank: usize) -> Result<Self> {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if l.generator() as usize > rank {
                return Err(Error::GeneratorOutOfRange {
                    generator: l.generator(),
                    rank,
                });
            }
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank, letters })
    }

    /// `x_start x_{start+1} ... x_end`.
    pub fn interval_product(start: u32, end: u32, rank: usize) -> Result<Self> {
        Word::reduce((start..=end).map(Letter::pos), rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Same letters, reinterpreted in a larger ambient rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Word::reduce(self.letters.iter().copied(), rank)
    }

    pub fn concat(&self, other: &Word) -> Result<Self> {
        self.check_rank(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn power(&self, k: i64) -> Self {
        if k == 0 || self.is_identity() {
            return Word::identity(self.rank);
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let k = k.unsigned_abs() as usize;
        // w = u c u^-1 with c cyclically reduced, so w^k = u c^k u^-1 needs no further cancellation.
        let ls = &base.letters;
        let mut t = 0;
        while t < ls.len() / 2 && ls[t] == ls[ls.len() - 1 - t].inverse() {
            t += 1;
        }
        let core = &ls[t..ls.len() - t];
        let mut letters = Vec::with_capacity(2 * t + core.len() * k);
        letters.extend_from_slice(&ls[..t]);
        for _ in 0..k {
            letters.extend_from_slice(core);
        }
        letters.extend_from_slice(&ls[ls.len() - t..]);
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// `s^-1 · self · s`, reduced.
    pub fn conjugate(&self, s: &Word) -> Result<Self> {
        self.check_rank(s)?;
        s.inverse().concat(self)?.concat(s)
    }

    pub fn exponent_sum(&self, generator: u32) -> Result<i64> {
        if generator == 0 || generator as usize > self.rank {
            return Err(Error::GeneratorOutOfRange {
                generator,
                rank: self.rank,
            });
        }
        Ok(self
            .letters
            .iter()
            .filter(|l| l.generator() == generator)
            .map(|l| l.sign() as i64)
            .sum())
    }

    /// Exponent sums of every generator, `x1` first.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for l in &self.letters {
            v[l.generator() as usize - 1] += l.sign() as i64;
        }
        v
    }

    /// No inverse letters. The identity word counts as positive.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Parse the `x1 x3^-2 x2` grammar. The empty string is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        parse_word_at(text, rank, 1, 1, DEFAULT_MAX_WORD_LEN)
    }

    /// Like [`Word::parse`], refusing inputs that expand to more than `max_len` letters.
    pub fn parse_with_limit(text: &str, rank: usize, max_len: usize) -> Result<Self> {
        parse_word_at(text, rank, 1, 1, max_len)
    }

    fn check_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// Parse a word whose first character sits at `line:column` of some file.
pub(crate) fn parse_word_at(text: &str, rank: usize, line: usize, column: usize, max_len: usize) -> Result<Word> {
    let mut raw = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        // split_whitespace does not expose positions; recover them.
        let start = offset + text[offset..].find(token).expect("token is in text");
        offset = start + token.len();
        let col = column + text[..start].chars().count();
        let (generator, exponent) = parse_token(token).map_err(|m| Error::parse(line, col, m))?;
        if generator == 0 || generator as usize > rank {
            return Err(Error::parse(
                line,
                col,
                format!("generator x{generator} is out of range for rank {rank}"),
            ));
        }
        let letter = Letter::new(generator, exponent.signum() as i32);
        let requested = (raw.len() as u64).saturating_add(exponent.unsigned_abs());
        if requested > max_len as u64 {
            return Err(Error::ResourceLimit {
                what: "word length",
                limit: max_len,
                requested: usize::try_from(requested).unwrap_or(usize::MAX),
            });
        }
        for _ in 0..exponent.unsigned_abs() {
            raw.push(letter);
        }
    }
    Word::reduce(raw, rank)
}

fn parse_token(token: &str) -> std::result::Result<(u32, i64), String> {
    let body = token
        .strip_prefix('x')
        .ok_or_else(|| format!("expected `x<index>`, found `{token}`"))?;
    let (index, exponent) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad generator index in `{token}`"));
    }
    let generator: u32 = index
        .parse()
        .map_err(|_| format!("generator index too large in `{token}`"))?;
    let exponent = match exponent {
        None => 1,
        Some(e) => {
            let v: i64 = e.parse().map_err(|_| format!("bad exponent in `{token}`"))?;
            if v == 0 {
                return Err(format!("zero exponent in `{token}`"));
            }
            v
        }
    };
    Ok((generator, exponent))
}

impl fmt::Display for Word {
    /// Reduced form with runs coalesced, e.g. `x1^2 x3^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i64 * l.sign() as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", l.generator())?;
            } else {
                write!(f, "x{}^{}", l.generator(), e)?;
            }
            i = j;
        }
        Ok(())
    }
}
