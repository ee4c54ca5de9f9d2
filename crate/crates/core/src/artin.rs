//! Artin n-presentations `<x1..xn | r1..rn>` with `prod r_i x_i r_i^-1 = x1 x2 ... xn`.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{parse_word_at, Letter, Word, DEFAULT_MAX_WORD_LEN};
use crate::smith::{invariant_factors, ExactInteger};

/// `n` relators over `x1..xn`. Relator `i` belongs to generator `i`.
///
/// Validity is checked with [`ArtinPresentation::verify_artin`], not enforced
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinPresentation {
    n: usize,
    relators: Vec<Word>,
}

impl ArtinPresentation {
    pub fn new(relators: Vec<Word>) -> Result<Self> {
        let n = relators.len();
        for r in &relators {
            if r.rank() != n {
                return Err(Error::RankMismatch {
                    left: n,
                    right: r.rank(),
                });
            }
        }
        Ok(ArtinPresentation { n, relators })
    }

    /// All relators trivial.
    pub fn identity(n: usize) -> Self {
        ArtinPresentation {
            n,
            relators: vec![Word::identity(n); n],
        }
    }

    /// The block presentation `Δ`: relators `start..=end` are
    /// `(x_start ... x_end)^exponent`, the rest are trivial.
    pub fn block_twist(n: usize, start: u32, end: u32, exponent: i64) -> Result<Self> {
        if start == 0 || start > end || end as usize > n {
            return Err(Error::Unsupported(format!(
                "block {start}..{end} does not fit in {n} generators"
            )));
        }
        let w = Word::interval_product(start, end, n)?.power(exponent);
        let relators = (1..=n as u32)
            .map(|j| {
                if (start..=end).contains(&j) {
                    w.clone()
                } else {
                    Word::identity(n)
                }
            })
            .collect();
        Ok(ArtinPresentation { n, relators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator(&self, i: usize) -> &Word {
        &self.relators[i - 1]
    }

    /// The reduced product `prod r_i x_i r_i^-1`.
    pub fn boundary_word(&self) -> Word {
        let mut raw: Vec<Letter> = Vec::new();
        for (i, r) in self.relators.iter().enumerate() {
            raw.extend_from_slice(r.letters());
            raw.push(Letter::pos(i as u32 + 1));
            raw.extend(r.letters().iter().rev().map(|l| l.inverse()));
        }
        Word::reduce(raw, self.n).expect("relators have rank n")
    }

    pub fn verify_artin(&self) -> bool {
        let target = Word::interval_product(1, self.n as u32, self.n).expect("in range");
        self.n == 0 || self.boundary_word() == target
    }

    /// Every relator, as a reduced word, has only positive exponents.
    pub fn is_positive(&self) -> bool {
        self.relators.iter().all(Word::is_positive)
    }

    /// `s ∘ r = (s_1 r_1^s, ..., s_n r_n^s)`, with `self` as `s`.
    pub fn compose(&self, r: &ArtinPresentation) -> Result<ArtinPresentation> {
        if self.n != r.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: r.n,
            });
        }
        let conjugated = substitute_conjugates(&r.relators, &self.relators)?;
        let relators = self
            .relators
            .iter()
            .zip(&conjugated)
            .map(|(s, rs)| s.concat(rs))
            .collect::<Result<Vec<_>>>()?;
        Ok(ArtinPresentation { n: self.n, relators })
    }

    /// Relators `φ_s(r_i) s_i` with `φ_s(x_j) = s_j x_j s_j^-1`, `self` as `s`.
    ///
    /// This is the presentation of the composite automorphism
    /// `x_i ↦ r_i x_i r_i^-1` followed by `φ_s`, so it satisfies the Artin
    /// condition whenever both operands do. [`compose`](Self::compose) follows
    /// the other conjugation convention and does not have that guarantee.
    pub fn compose_action(&self, r: &ArtinPresentation) -> Result<ArtinPresentation> {
        if self.n != r.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: r.n,
            });
        }
        let inverted: Vec<Word> = self.relators.iter().map(Word::inverse).collect();
        let conjugated = substitute_conjugates(&r.relators, &inverted)?;
        let relators = conjugated
            .iter()
            .zip(&self.relators)
            .map(|(rs, s)| rs.concat(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(ArtinPresentation { n: self.n, relators })
    }

    /// Exponent-sum matrix and its Smith normal form.
    pub fn abelianization<T: ExactInteger + From<i64>>(&self) -> AbelianInvariants<T> {
        let matrix: Vec<Vec<T>> = self
            .relators
            .iter()
            .map(|r| r.exponent_vector().into_iter().map(T::from).collect())
            .collect();
        let invariant_factors = invariant_factors(&matrix);
        let free_rank = invariant_factors.iter().filter(|d| d.is_zero()).count();
        AbelianInvariants {
            matrix,
            invariant_factors,
            free_rank,
        }
    }

    /// Parse the `n=<N>` / `r<i>: <word>` file format.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_limit(text, DEFAULT_MAX_WORD_LEN)
    }

    pub fn parse_with_limit(text: &str, max_word_len: usize) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut relators = Vec::new();
        let mut last_line = 0;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let trimmed = line.trim_start();
            let indent = line.len() - trimmed.len();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some(size) = n else {
                let v = trimmed
                    .trim_end()
                    .strip_prefix("n=")
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(lineno, indent + 1, "expected `n=<N>` header"))?;
                n = Some(v);
                continue;
            };
            let expected = relators.len() + 1;
            if expected > size {
                return Err(Error::parse(lineno, indent + 1, format!("more than {size} relators")));
            }
            let label = format!("r{expected}:");
            let Some(rest) = trimmed.strip_prefix(&label) else {
                return Err(Error::parse(lineno, indent + 1, format!("expected `{label} <word>`")));
            };
            let col = indent + label.len() + 1;
            relators.push(parse_word_at(rest, size, lineno, col, max_word_len)?);
        }
        let Some(size) = n else {
            return Err(Error::parse(last_line.max(1), 1, "missing `n=<N>` header"));
        };
        if relators.len() != size {
            return Err(Error::parse(
                last_line.max(1),
                1,
                format!("expected {size} relators, found {}", relators.len()),
            ));
        }
        Ok(ArtinPresentation { n: size, relators })
    }
}

impl fmt::Display for ArtinPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for (i, r) in self.relators.iter().enumerate() {
            if r.is_identity() {
                writeln!(f, "r{}:", i + 1)?;
            } else {
                writeln!(f, "r{}: {}", i + 1, r)?;
            }
        }
        Ok(())
    }
}

/// The letters of `r^s` before any cancellation: every `x_j^±1` of `r`
/// becomes `s_j^-1 x_j^±1 s_j`.
pub fn conjugate_expansion(r: &Word, s: &[Word]) -> Result<Vec<Letter>> {
    if s.len() != r.rank() {
        return Err(Error::LengthMismatch {
            expected: r.rank(),
            found: s.len(),
        });
    }
    let mut out = Vec::new();
    for &l in r.letters() {
        let sj = &s[l.generator() as usize - 1];
        if sj.rank() != r.rank() {
            return Err(Error::RankMismatch {
                left: r.rank(),
                right: sj.rank(),
            });
        }
        out.extend(sj.letters().iter().rev().map(|x| x.inverse()));
        out.push(l);
        out.extend_from_slice(sj.letters());
    }
    Ok(out)
}

/// `r^s`: each relator with `x_j` replaced by `s_j^-1 x_j s_j`, reduced.
pub fn substitute_conjugates(r: &[Word], s: &[Word]) -> Result<Vec<Word>> {
    if r.len() != s.len() {
        return Err(Error::LengthMismatch {
            expected: r.len(),
            found: s.len(),
        });
    }
    r.iter()
        .map(|ri| {
            if ri.rank() != r.len() {
                return Err(Error::RankMismatch {
                    left: r.len(),
                    right: ri.rank(),
                });
            }
            Word::reduce(conjugate_expansion(ri, s)?, ri.rank())
        })
        .collect()
}

/// First homology data of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants<T> {
    /// Entry `(i, j)` is the exponent sum of `x_{j+1}` in `r_{i+1}`.
    pub matrix: Vec<Vec<T>>,
    /// Smith diagonal, divisibility chain, zeros last.
    pub invariant_factors: Vec<T>,
    pub free_rank: usize,
}

impl<T: ExactInteger> AbelianInvariants<T> {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

impl<T: ExactInteger + fmt::Display> fmt::Display for AbelianInvariants<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.invariant_factors.iter().map(|d| d.to_string()).collect();
        let torsion: Vec<String> = self.torsion().iter().map(|d| d.to_string()).collect();
        writeln!(f, "invariant_factors: {}", factors.join(" "))?;
        writeln!(f, "free_rank: {}", self.free_rank)?;
        writeln!(f, "torsion: {}", torsion.join(" "))
    }
}
