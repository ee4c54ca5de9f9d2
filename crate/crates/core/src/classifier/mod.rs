//! Positivity verdicts for small 3-braids and framed twist trees, plus the
//! brute-force enumeration used to check them.

mod enumerate;

use std::fmt;

use crate::artin::ArtinPresentation;
use crate::error::{Error, Result};
use crate::freegroup::{Letter, Word};
use crate::presenter::{relators_from_tree, relators_small3};
use crate::twist::FramedTwistTree;

pub use enumerate::{default_max_len, enumerate_positive, EnumMode, EnumOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Case1F1Zero,
    Case2E1ZeroNonneg,
    Case2F1MinusOne,
    None,
    /// Admissible, but not through the three-box classification.
    NotSmallAdmissible,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Case1F1Zero => "Case1-f1zero",
            CaseTag::Case2E1ZeroNonneg => "Case2-e1zero-nonneg",
            CaseTag::Case2F1MinusOne => "Case2-f1minus1",
            CaseTag::None => "none",
            CaseTag::NotSmallAdmissible => "not-small-admissible",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a positivity decision. `witness` is present exactly when
/// `admissible` holds, and is then a positive Artin presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub admissible: bool,
    pub case: CaseTag,
    pub witness: Option<ArtinPresentation>,
}

impl Verdict {
    fn yes(case: CaseTag, witness: ArtinPresentation) -> Self {
        debug_assert!(witness.is_positive() && witness.verify_artin());
        Verdict {
            admissible: true,
            case,
            witness: Some(witness),
        }
    }

    fn no() -> Self {
        Verdict {
            admissible: false,
            case: CaseTag::None,
            witness: None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "admissible: {}", if self.admissible { "yes" } else { "no" })?;
        writeln!(f, "case: {}", self.case)?;
        if let Some(w) = &self.witness {
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// The three-box classification, inequalities taken literally. Exactly one of
/// `e1`, `f1` may be nonzero; when both vanish the first case is reported.
///
/// Errors only when the witness would exceed the default word length limit.
pub fn classify_small3(e1: i64, f1: i64, e: i64, m: [i64; 3]) -> Result<Verdict> {
    let [m1, m2, m3] = m.map(|v| v as i128);
    let (e1w, f1w, ew) = (e1 as i128, f1 as i128, e as i128);
    let case = if e1 != 0 && f1 != 0 {
        None
    } else if f1 == 0 && m1 >= ew + e1w && m2 >= ew + e1w && ew + e1w >= 0 && m3 >= ew && e >= 0 && e1 >= 0 {
        Some(CaseTag::Case1F1Zero)
    } else if e1 == 0 && m1 >= ew && m2 >= ew + f1w && m3 >= ew + f1w && e >= 0 && f1 >= 0 {
        Some(CaseTag::Case2E1ZeroNonneg)
    } else if e1 == 0 && f1 == -1 && m1 >= ew && m2 >= ew - 1 && m3 >= ew - 1 && e >= 1 {
        Some(CaseTag::Case2F1MinusOne)
    } else {
        None
    };
    Ok(match case {
        Some(tag) => Verdict::yes(tag, relators_small3(e, e1, f1, m)?),
        None => Verdict::no(),
    })
}

/// Generate the tree's presentation and inspect its reduced relators.
pub fn admits_positive(ft: &FramedTwistTree) -> Result<Verdict> {
    let p = relators_from_tree(ft)?;
    Ok(if p.is_positive() {
        Verdict::yes(CaseTag::NotSmallAdmissible, p)
    } else {
        Verdict::no()
    })
}

/// `r1 = (x1x2)^k x1^a`, `r2 = (x1x2)^k x2^b` for some `k, a, b >= 0`.
pub fn matches_family_n2(p: &ArtinPresentation) -> Result<bool> {
    if p.n() != 2 {
        return Err(Error::Unsupported(format!(
            "the two-generator family needs n=2, got n={}",
            p.n()
        )));
    }
    let split = |w: &Word, tail: u32| -> Option<usize> {
        let ls = w.letters();
        let mut k = 0;
        while ls.len() >= 2 * k + 2 && ls[2 * k] == Letter::pos(1) && ls[2 * k + 1] == Letter::pos(2) {
            k += 1;
        }
        ls[2 * k..].iter().all(|&l| l == Letter::pos(tail)).then_some(k)
    };
    Ok(match (split(p.relator(1), 1), split(p.relator(2), 2)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    })
}
