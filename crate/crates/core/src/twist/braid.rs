use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::Word;

/// An Artin generator `σ_i^±1`, stored as a nonzero signed index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sigma(i32);

impl Sigma {
    pub fn new(index: u32, sign: i32) -> Self {
        assert!(index >= 1, "braid generators are 1-based");
        let i = i32::try_from(index).expect("braid generator index too large");
        Sigma(if sign < 0 { -i } else { i })
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn sign(self) -> i32 {
        self.0.signum()
    }
}

/// Counts of positive and negative generators in a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SignSummary {
    pub positive: usize,
    pub negative: usize,
}

impl SignSummary {
    pub fn single_sign(&self) -> bool {
        self.positive == 0 || self.negative == 0
    }
}

/// A word in `σ_1..σ_{n-1}` on `n` strands. Not reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Sigma>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Sigma>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|s| s.index() as usize >= n.max(1)) {
            return Err(Error::GeneratorOutOfRange {
                generator: bad.index(),
                rank: n.saturating_sub(1),
            });
        }
        Ok(BraidWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Sigma] {
        &self.letters
    }

    /// `perm[p-1]` is the strand that ends at position `p`.
    pub fn permutation(&self) -> Vec<u32> {
        let mut perm: Vec<u32> = (1..=self.n as u32).collect();
        for s in &self.letters {
            let i = s.index() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(p, &s)| s as usize == p + 1)
    }

    pub fn crossing_signs(&self) -> SignSummary {
        let mut out = SignSummary::default();
        for s in &self.letters {
            if s.sign() > 0 {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
        }
        out
    }

    /// Images of `x_1..x_n` under the Artin action of this braid on `F_n`:
    /// `σ_i` sends `x_i ↦ x_i x_{i+1} x_i^-1`, `x_{i+1} ↦ x_i`.
    ///
    /// Braids are equal exactly when their actions agree, so this doubles as a
    /// solution to the braid word problem.
    pub fn free_group_action(&self) -> Vec<Word> {
        let n = self.n;
        let mut images: Vec<Word> = (1..=n as u32)
            .map(|g| Word::generator(g, n).expect("in range"))
            .collect();
        for s in &self.letters {
            let i = s.index() as usize - 1;
            let (a, b) = (images[i].clone(), images[i + 1].clone());
            if s.sign() > 0 {
                images[i] = a.concat(&b).and_then(|w| w.concat(&a.inverse())).expect("same rank");
                images[i + 1] = a;
            } else {
                images[i] = b.clone();
                images[i + 1] = b.inverse().concat(&a).and_then(|w| w.concat(&b)).expect("same rank");
            }
        }
        images
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let s = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == s {
                j += 1;
            }
            let e = (j - i) as i64 * s.sign() as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "s{}", s.index())?;
            } else {
                write!(f, "s{}^{}", s.index(), e)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// `σ1^(2 e1) σ2^(2 f1) (σ2 σ1 σ2)^(2 e)` on three strands, as written.
pub fn small3(e1: i64, f1: i64, e: i64) -> BraidWord {
    let mut letters = Vec::new();
    let push_pow = |letters: &mut Vec<Sigma>, index: u32, k: i64| {
        for _ in 0..k.unsigned_abs() {
            letters.push(Sigma::new(index, k.signum() as i32));
        }
    };
    push_pow(&mut letters, 1, 2 * e1);
    push_pow(&mut letters, 2, 2 * f1);
    let (cycle, reps) = if e >= 0 {
        ([Sigma::new(2, 1), Sigma::new(1, 1), Sigma::new(2, 1)], 2 * e)
    } else {
        ([Sigma::new(2, -1), Sigma::new(1, -1), Sigma::new(2, -1)], -2 * e)
    };
    for _ in 0..reps {
        letters.extend_from_slice(&cycle);
    }
    BraidWord { n: 3, letters }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, ls: &[(u32, i32)]) -> BraidWord {
        BraidWord::new(n, ls.iter().map(|&(i, s)| Sigma::new(i, s)).collect()).unwrap()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(bw(2, &[(1, 1)]).permutation(), vec![2, 1]);
        assert!(!bw(2, &[(1, 1)]).is_pure());
        assert!(bw(2, &[(1, 1), (1, 1)]).is_pure());
        assert!(BraidWord::new(2, vec![Sigma::new(2, 1)]).is_err());
    }

    #[test]
    fn small3_examples() {
        assert!(small3(0, 0, 0).letters().is_empty());
        assert_eq!(small3(1, 0, 0), bw(3, &[(1, 1), (1, 1)]));
        assert_eq!(small3(0, -1, 1).to_string(), "s2^-2 s2 s1 s2^2 s1 s2");
        assert!(small3(2, -3, 1).is_pure());
    }

    #[test]
    fn crossing_sign_examples() {
        assert_eq!(
            bw(3, &[(1, 1), (2, -1)]).crossing_signs(),
            SignSummary {
                positive: 1,
                negative: 1
            }
        );
        assert_eq!(
            small3(0, -1, 1).crossing_signs(),
            SignSummary {
                positive: 6,
                negative: 2
            }
        );
    }

    #[test]
    fn full_twist_words_agree_on_three_strands() {
        // (σ1σ2)^3 and (σ2σ1σ2)^2 are both the full twist of B_3
        let a = bw(3, &[(1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1)]);
        let b = bw(3, &[(2, 1), (1, 1), (2, 1), (2, 1), (1, 1), (2, 1)]);
        assert_eq!(a.free_group_action(), b.free_group_action());
        assert_ne!(a.free_group_action(), bw(3, &[(1, 1), (1, 1)]).free_group_action());
    }

    #[test]
    fn action_of_inverse_cancels() {
        let w = bw(4, &[(1, 1), (3, -1), (2, 1), (2, -1), (3, 1), (1, -1)]);
        let id: Vec<Word> = (1..=4).map(|g| Word::generator(g, 4).unwrap()).collect();
        assert_eq!(w.free_group_action(), id);
    }

    #[test]
    fn action_fixes_the_boundary_word() {
        let w = small3(1, -2, 3);
        let prod = w
            .free_group_action()
            .iter()
            .try_fold(Word::identity(3), |acc, x| acc.concat(x))
            .unwrap();
        assert_eq!(prod, Word::parse("x1 x2 x3", 3).unwrap());
    }
}
