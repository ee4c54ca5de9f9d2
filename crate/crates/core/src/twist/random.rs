//! Seeded generation of valid twist trees, and mutations that break validity.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Block, FramedTwistTree, NegativeMode, TwistTree};

#[derive(Debug, Clone)]
pub struct TreeConfig {
    pub max_n: usize,
    pub max_depth: usize,
    /// Largest nonnegative exponent.
    pub max_exponent: i64,
    /// Probability that an eligible block gets exponent `-1`.
    pub negative_rate: f64,
    pub framing: (i64, i64),
    pub mode: NegativeMode,
}

impl Default for TreeConfig {
    fn default() -> Self {
        TreeConfig {
            max_n: 8,
            max_depth: 4,
            max_exponent: 3,
            negative_rate: 0.35,
            framing: (-10, 10),
            mode: NegativeMode::Lax,
        }
    }
}

/// Deterministic stream of random valid framed trees.
pub struct TreeGenerator {
    rng: ChaCha8Rng,
    config: TreeConfig,
}

impl TreeGenerator {
    pub fn new(seed: u64, config: TreeConfig) -> Self {
        TreeGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            config,
        }
    }

    pub fn tree(&mut self) -> TwistTree {
        let n = self.rng.gen_range(1..=self.config.max_n.max(1));
        self.tree_with_n(n)
    }

    pub fn tree_with_n(&mut self, n: usize) -> TwistTree {
        let mut negatives = 0;
        let roots = self.segment(1, n as u32, 1, None, &mut negatives);
        TwistTree::new(n, roots)
    }

    pub fn framed(&mut self) -> FramedTwistTree {
        let tree = self.tree();
        let (lo, hi) = self.config.framing;
        let framing = (0..tree.n).map(|_| self.rng.gen_range(lo..=hi)).collect();
        FramedTwistTree { tree, framing }
    }

    /// Disjoint, ordered blocks inside `lo..=hi`, never equal to the parent.
    fn segment(
        &mut self,
        lo: u32,
        hi: u32,
        depth: usize,
        parent: Option<(u32, u32, i64)>,
        negatives: &mut usize,
    ) -> Vec<Block> {
        let mut out = Vec::new();
        if depth > self.config.max_depth {
            return out;
        }
        let mut p = lo;
        while p <= hi {
            if !self.rng.gen_bool(0.6) {
                p += 1;
                continue;
            }
            let len = self.rng.gen_range(1..=hi - p + 1);
            let (start, end) = (p, p + len - 1);
            p = end + 1;
            if let Some((ps, pe, _)) = parent {
                if (start, end) == (ps, pe) {
                    continue;
                }
            }
            let may_negate = match parent {
                Some((ps, _, pe)) => {
                    start != ps && pe >= 1 && (self.config.mode == NegativeMode::Lax || *negatives == 0)
                }
                None => false,
            };
            let exponent = if may_negate && self.rng.gen_bool(self.config.negative_rate) {
                *negatives += 1;
                -1
            } else {
                self.rng.gen_range(0..=self.config.max_exponent)
            };
            let children = if end > start {
                self.segment(start, end, depth + 1, Some((start, end, exponent)), negatives)
            } else {
                Vec::new()
            };
            out.push(Block {
                start,
                end,
                exponent,
                children,
            });
        }
        out
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Ways to break a valid tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Two siblings share a chord.
    Overlap,
    /// A child reaches outside its parent.
    EscapeParent,
    /// A negative exponent where the rules forbid one.
    IllegalNegative,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::Overlap, Mutation::EscapeParent, Mutation::IllegalNegative];
}

/// Apply `m` to a copy of `tree`. `None` when the tree has no room for it
/// (only `EscapeParent` on a single chord).
pub fn mutate<R: Rng>(tree: &TwistTree, m: Mutation, rng: &mut R) -> Option<TwistTree> {
    let mut t = tree.clone();
    let n = t.n as u32;
    let mut paths = Vec::new();
    collect_paths(&t.roots, &mut Vec::new(), &mut paths);
    match m {
        Mutation::Overlap => {
            // sibling lists are identified by their parent's path; roots by []
            let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
            lists.extend(paths.iter().cloned());
            lists.retain(|p| children_mut(&mut t.roots, p).len() >= 2);
            if let Some(p) = lists.choose(rng) {
                let list = children_mut(&mut t.roots, p);
                let i = rng.gen_range(0..list.len() - 1);
                list[i].end = list[i + 1].start;
            } else if let Some(r) = t.roots.first().cloned() {
                t.roots.insert(1, Block::new(r.end, r.end, 0));
            } else {
                t.roots = vec![Block::new(1, 1, 0), Block::new(1, 1, 0)];
            }
        }
        Mutation::EscapeParent => {
            if n < 2 {
                return None;
            }
            paths.retain(|p| {
                let b = block_mut(&mut t.roots, p);
                (b.start, b.end) != (1, n)
            });
            if let Some(p) = paths.choose(rng) {
                let b = block_mut(&mut t.roots, p);
                let outside: Vec<u32> = (1..=n).filter(|&x| !b.contains(x)).collect();
                let x = *outside.choose(rng).expect("block is not 1..n");
                b.children.push(Block::new(x, x, 0));
            } else {
                t.roots
                    .push(Block::new(1, n - 1, 0).with_children(vec![Block::new(n, n, 0)]));
            }
        }
        Mutation::IllegalNegative => {
            if let Some(p) = paths.choose(rng) {
                let exponent = if p.len() == 1 { -1 } else { -rng.gen_range(2..=4) };
                block_mut(&mut t.roots, p).exponent = exponent;
            } else {
                t.roots.push(Block::new(1, 1, -1));
            }
        }
    }
    Some(t)
}

fn collect_paths(list: &[Block], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for (i, b) in list.iter().enumerate() {
        prefix.push(i);
        out.push(prefix.clone());
        collect_paths(&b.children, prefix, out);
        prefix.pop();
    }
}

fn block_mut<'a>(roots: &'a mut [Block], path: &[usize]) -> &'a mut Block {
    let (first, rest) = path.split_first().expect("nonempty path");
    rest.iter().fold(&mut roots[*first], |b, &i| &mut b.children[i])
}

fn children_mut<'a>(roots: &'a mut Vec<Block>, path: &[usize]) -> &'a mut Vec<Block> {
    if path.is_empty() {
        roots
    } else {
        &mut block_mut(roots, path).children
    }
}
