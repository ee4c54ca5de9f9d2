use rayon::prelude::*;

use crate::artin::ArtinPresentation;
use crate::error::{Error, Result};
use crate::freegroup::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumMode {
    /// Choose `r_1..r_{n-1}`, then solve the Artin condition for `r_n`.
    #[default]
    Pruned,
    /// Try every tuple and test the Artin condition. Slow; for cross-checks.
    Reference,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    pub mode: EnumMode,
    /// Replaces [`default_max_len`] for every `n` when set.
    pub max_len_limit: Option<usize>,
}

/// Largest `max_len` allowed without an explicit override.
pub fn default_max_len(n: usize) -> usize {
    match n {
        0 => 0,
        1 | 2 => 12,
        3 => 9,
        _ => 0,
    }
}

/// Every tuple of positive words with total length at most `max_len` that
/// satisfies the Artin condition, in lexicographic order of
/// `(r_1, ..., r_n)`. Output is independent of the rayon thread count.
pub fn enumerate_positive(n: usize, max_len: usize, opts: EnumOptions) -> Result<Vec<ArtinPresentation>> {
    if n == 0 {
        return Err(Error::Unsupported("enumeration needs n >= 1".into()));
    }
    let limit = opts.max_len_limit.unwrap_or_else(|| default_max_len(n));
    if max_len > limit {
        return Err(Error::ResourceLimit {
            what: "enumeration length",
            limit,
            requested: max_len,
        });
    }
    let search = Search { n, mode: opts.mode };
    let mut firsts = Vec::new();
    for_each_positive(n, max_len, &mut |ls| firsts.push(ls.to_vec()));
    let out = firsts
        .into_par_iter()
        .map(|r1| {
            let mut found = Vec::new();
            let mut prefix = vec![r1];
            let product = search.step(&Word::identity(n), &prefix[0], 0);
            let budget = max_len - prefix[0].len();
            search.descend(&mut prefix, &product, budget, &mut found);
            found
        })
        .collect::<Vec<_>>();
    Ok(out.into_iter().flatten().collect())
}

struct Search {
    n: usize,
    mode: EnumMode,
}

impl Search {
    /// `product · r x_{i+1} r^-1`.
    fn step(&self, product: &Word, r: &[Letter], i: usize) -> Word {
        let mut raw = product.letters().to_vec();
        raw.extend_from_slice(r);
        raw.push(Letter::pos(i as u32 + 1));
        raw.extend(r.iter().rev().map(|l| l.inverse()));
        Word::reduce(raw, self.n).expect("letters are in range")
    }

    /// `prefix` holds `r_1..r_k`; `product` is their contribution.
    fn descend(&self, prefix: &mut Vec<Vec<Letter>>, product: &Word, budget: usize, out: &mut Vec<ArtinPresentation>) {
        let k = prefix.len();
        if k == self.n {
            let p = self.finish(prefix);
            if p.verify_artin() {
                out.push(p);
            }
            return;
        }
        if k == self.n - 1 && self.mode == EnumMode::Pruned {
            self.solve_last(prefix, product, budget, out);
            return;
        }
        let mut words = Vec::new();
        for_each_positive(self.n, budget, &mut |ls| words.push(ls.to_vec()));
        for w in words {
            let next = self.step(product, &w, k);
            let rest = budget - w.len();
            prefix.push(w);
            self.descend(prefix, &next, rest, out);
            prefix.pop();
        }
    }

    /// `r_n x_n r_n^-1` must equal `t = product^-1 · x1..xn`. With
    /// `t = v x_n v^-1` reduced, the solutions are `r_n = v x_n^j`.
    fn solve_last(
        &self,
        prefix: &mut Vec<Vec<Letter>>,
        product: &Word,
        budget: usize,
        out: &mut Vec<ArtinPresentation>,
    ) {
        let n = self.n;
        let target = Word::interval_product(1, n as u32, n).expect("in range");
        let t = product.inverse().concat(&target).expect("same rank");
        let ls = t.letters();
        if ls.len().is_multiple_of(2) {
            return;
        }
        let h = ls.len() / 2;
        let v = &ls[..h];
        if ls[h] != Letter::pos(n as u32)
            || !v.iter().all(|l| l.is_positive())
            || v.iter().rev().map(|l| l.inverse()).ne(ls[h + 1..].iter().copied())
            || v.len() > budget
        {
            return;
        }
        for j in 0..=budget - v.len() {
            let mut r = v.to_vec();
            r.extend(std::iter::repeat_n(Letter::pos(n as u32), j));
            prefix.push(r);
            out.push(self.finish(prefix));
            prefix.pop();
        }
    }

    fn finish(&self, prefix: &[Vec<Letter>]) -> ArtinPresentation {
        let words = prefix
            .iter()
            .map(|ls| Word::reduce(ls.iter().copied(), self.n).expect("in range"))
            .collect();
        ArtinPresentation::new(words).expect("rank n")
    }
}

/// Positive words of length `<= max_len` in lexicographic order, each prefix
/// before its extensions.
fn for_each_positive(n: usize, max_len: usize, f: &mut dyn FnMut(&[Letter])) {
    fn go(n: usize, max_len: usize, cur: &mut Vec<Letter>, f: &mut dyn FnMut(&[Letter])) {
        f(cur);
        if cur.len() == max_len {
            return;
        }
        for g in 1..=n as u32 {
            cur.push(Letter::pos(g));
            go(n, max_len, cur, f);
            cur.pop();
        }
    }
    go(n, max_len, &mut Vec::new(), f);
}
