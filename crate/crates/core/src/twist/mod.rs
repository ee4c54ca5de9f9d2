//! Nested block-twist trees: pure braids built from full twists on blocks of
//! consecutive chords, with the restricted `-1` twist.

mod braid;
mod parse;
pub mod random;

use std::fmt;

use crate::error::{Error, Result};

pub use braid::{small3, BraidWord, Sigma, SignSummary};

/// A block of consecutive chords `start..=end` carrying `exponent` full twists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub start: u32,
    pub end: u32,
    pub exponent: i64,
    pub children: Vec<Block>,
}

impl Block {
    pub fn new(start: u32, end: u32, exponent: i64) -> Self {
        Block {
            start,
            end,
            exponent,
            children: Vec::new(),
        }
    }

    pub fn with_children(mut self, children: Vec<Block>) -> Self {
        self.children = children;
        self
    }

    pub fn width(&self) -> u32 {
        self.end + 1 - self.start
    }

    pub fn contains(&self, chord: u32) -> bool {
        (self.start..=self.end).contains(&chord)
    }
}

/// How many `-1` blocks a tree may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegativeMode {
    /// Per-block rule only.
    #[default]
    Lax,
    /// Per-block rule plus at most one `-1` block in the whole tree.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `start > end` or `start == 0`.
    EmptyInterval {
        start: u32,
        end: u32,
    },
    OutOfRange {
        start: u32,
        end: u32,
        n: usize,
    },
    NotContained {
        child: (u32, u32),
        parent: (u32, u32),
    },
    Overlap {
        left: (u32, u32),
        right: (u32, u32),
    },
    Unordered {
        left: (u32, u32),
        right: (u32, u32),
    },
    ExponentBelowMinusOne {
        block: (u32, u32),
        exponent: i64,
    },
    NegativeWithoutParent {
        block: (u32, u32),
    },
    NegativeLeftmostChild {
        block: (u32, u32),
    },
    ParentExponentTooSmall {
        block: (u32, u32),
        parent_exponent: i64,
    },
    MultipleNegatives {
        count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let iv = |(a, b): (u32, u32)| format!("{a}..{b}");
        match self {
            Violation::EmptyInterval { start, end } => {
                write!(f, "block {start}..{end} is not a consecutive range")
            }
            Violation::OutOfRange { start, end, n } => {
                write!(f, "block {start}..{end} lies outside chords 1..{n}")
            }
            Violation::NotContained { child, parent } => {
                write!(f, "block {} is not inside its parent {}", iv(*child), iv(*parent))
            }
            Violation::Overlap { left, right } => {
                write!(f, "sibling blocks {} and {} overlap", iv(*left), iv(*right))
            }
            Violation::Unordered { left, right } => {
                write!(f, "sibling blocks {} and {} are out of order", iv(*left), iv(*right))
            }
            Violation::ExponentBelowMinusOne { block, exponent } => {
                write!(
                    f,
                    "block {} has exponent {exponent}; only -1 is allowed below zero",
                    iv(*block)
                )
            }
            Violation::NegativeWithoutParent { block } => {
                write!(f, "top-level block {} has a negative exponent", iv(*block))
            }
            Violation::NegativeLeftmostChild { block } => {
                write!(
                    f,
                    "block {} is the leftmost part of its parent and cannot be -1",
                    iv(*block)
                )
            }
            Violation::ParentExponentTooSmall { block, parent_exponent } => write!(
                f,
                "block {} is -1 but its parent has exponent {parent_exponent} < 1",
                iv(*block)
            ),
            Violation::MultipleNegatives { count } => {
                write!(f, "{count} blocks are -1; strict mode allows one")
            }
        }
    }
}

/// A forest of nested blocks on chords `1..=n`. Chords outside every block
/// are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistTree {
    pub n: usize,
    pub roots: Vec<Block>,
}

impl TwistTree {
    pub fn new(n: usize, roots: Vec<Block>) -> Self {
        TwistTree { n, roots }
    }

    pub fn empty(n: usize) -> Self {
        TwistTree { n, roots: Vec::new() }
    }

    /// Preorder traversal with each block's parent.
    pub fn blocks(&self) -> Vec<(&Block, Option<&Block>)> {
        fn walk<'a>(b: &'a Block, parent: Option<&'a Block>, out: &mut Vec<(&'a Block, Option<&'a Block>)>) {
            out.push((b, parent));
            for c in &b.children {
                walk(c, Some(b), out);
            }
        }
        let mut out = Vec::new();
        for r in &self.roots {
            walk(r, None, &mut out);
        }
        out
    }

    /// Blocks containing `chord`, outermost first.
    pub fn chain(&self, chord: u32) -> Vec<&Block> {
        let mut out = Vec::new();
        let mut level = &self.roots;
        while let Some(b) = level.iter().find(|b| b.contains(chord)) {
            out.push(b);
            level = &b.children;
        }
        out
    }

    pub fn depth(&self) -> usize {
        fn d(b: &Block) -> usize {
            1 + b.children.iter().map(d).max().unwrap_or(0)
        }
        self.roots.iter().map(d).max().unwrap_or(0)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.blocks().iter().all(|(b, _)| b.exponent >= 0)
    }

    /// Every membership violation, in preorder. Empty means valid.
    pub fn violations(&self, mode: NegativeMode) -> Vec<Violation> {
        let mut out = Vec::new();
        check_siblings(&self.roots, None, self.n, &mut out);
        let mut negatives = 0;
        for (b, parent) in self.blocks() {
            let id = (b.start, b.end);
            if b.exponent < -1 {
                out.push(Violation::ExponentBelowMinusOne {
                    block: id,
                    exponent: b.exponent,
                });
            } else if b.exponent == -1 {
                negatives += 1;
                match parent {
                    None => out.push(Violation::NegativeWithoutParent { block: id }),
                    Some(p) => {
                        if b.start == p.start {
                            out.push(Violation::NegativeLeftmostChild { block: id });
                        }
                        if p.exponent < 1 {
                            out.push(Violation::ParentExponentTooSmall {
                                block: id,
                                parent_exponent: p.exponent,
                            });
                        }
                    }
                }
            }
            check_siblings(&b.children, Some(b), self.n, &mut out);
        }
        if mode == NegativeMode::Strict && negatives > 1 {
            out.push(Violation::MultipleNegatives { count: negatives });
        }
        out
    }

    pub fn validate(&self, mode: NegativeMode) -> Result<()> {
        let v = self.violations(mode);
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidTree(v))
        }
    }

    /// Full-twist word, outermost blocks first. Width-1 blocks contribute nothing.
    pub fn braid_word(&self) -> Result<BraidWord> {
        self.validate(NegativeMode::Lax)?;
        let mut letters = Vec::new();
        for (b, _) in self.blocks() {
            if b.width() < 2 || b.exponent == 0 {
                continue;
            }
            let k = b.width() as i64;
            let sign = b.exponent.signum() as i32;
            let cycle: Vec<Sigma> = if sign > 0 {
                (b.start..b.end).map(|i| Sigma::new(i, 1)).collect()
            } else {
                (b.start..b.end).rev().map(|i| Sigma::new(i, -1)).collect()
            };
            for _ in 0..k * b.exponent.abs() {
                letters.extend_from_slice(&cycle);
            }
        }
        BraidWord::new(self.n, letters)
    }
}

fn check_siblings(blocks: &[Block], parent: Option<&Block>, n: usize, out: &mut Vec<Violation>) {
    for b in blocks {
        if b.start == 0 || b.start > b.end {
            out.push(Violation::EmptyInterval {
                start: b.start,
                end: b.end,
            });
        } else if b.end as usize > n {
            out.push(Violation::OutOfRange {
                start: b.start,
                end: b.end,
                n,
            });
        }
        if let Some(p) = parent {
            if b.start < p.start || b.end > p.end {
                out.push(Violation::NotContained {
                    child: (b.start, b.end),
                    parent: (p.start, p.end),
                });
            }
        }
    }
    for pair in blocks.windows(2) {
        let (l, r) = (&pair[0], &pair[1]);
        if l.start <= r.end && r.start <= l.end {
            out.push(Violation::Overlap {
                left: (l.start, l.end),
                right: (r.start, r.end),
            });
        } else if r.end < l.start {
            out.push(Violation::Unordered {
                left: (l.start, l.end),
                right: (r.start, r.end),
            });
        }
    }
}

/// A twist tree with surgery coefficients `m_1..m_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedTwistTree {
    pub tree: TwistTree,
    pub framing: Vec<i64>,
}

impl FramedTwistTree {
    pub fn new(tree: TwistTree, framing: Vec<i64>) -> Result<Self> {
        if framing.len() != tree.n {
            return Err(Error::FramingLength {
                expected: tree.n,
                found: framing.len(),
            });
        }
        Ok(FramedTwistTree { tree, framing })
    }

    pub fn n(&self) -> usize {
        self.tree.n
    }
}
