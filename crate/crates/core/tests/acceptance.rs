//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use artin_core::artin::conjugate_expansion;
use artin_core::classifier::{default_max_len, EnumMode, EnumOptions};
use artin_core::twist::random::{TreeConfig, TreeGenerator};
use artin_core::{
    classify_small3, enumerate_positive, matches_family_n2, positivity_slack, presets, relators_from_tree,
    relators_small3, substitute_conjugates, ArtinPresentation, Block, FramedTwistTree, Letter, TwistTree, Word,
};

const SUITE_SEED: u64 = 0x5eed_a471;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn suite_trees() -> Vec<FramedTwistTree> {
    let mut g = TreeGenerator::new(SUITE_SEED, TreeConfig::default());
    (0..500).map(|_| g.framed()).collect()
}

fn artin_closure() -> Outcome {
    let trees = suite_trees();
    let bad = trees
        .iter()
        .filter(|ft| !relators_from_tree(ft).map(|p| p.verify_artin()).unwrap_or(false))
        .count();
    let negatives = trees.iter().filter(|ft| !ft.tree.all_nonnegative()).count();
    outcome(
        bad == 0,
        format!(
            "{} trees ({negatives} with a -1 block), {bad} failing the Artin condition",
            trees.len()
        ),
    )
}

/// All forests of distinct nested intervals inside `lo..=hi`, at most `depth`
/// levels deep, no block equal to `parent`. Exponents are left at zero.
fn shapes(lo: u32, hi: u32, depth: usize, parent: Option<(u32, u32)>) -> Vec<Vec<Block>> {
    if lo > hi || depth == 0 {
        return vec![Vec::new()];
    }
    let mut out = shapes(lo + 1, hi, depth, parent);
    for end in lo..=hi {
        if parent == Some((lo, end)) {
            continue;
        }
        let inner = shapes(lo, end, depth - 1, Some((lo, end)));
        let rest = shapes(end + 1, hi, depth, parent);
        for children in &inner {
            for tail in &rest {
                let mut forest = vec![Block::new(lo, end, 0).with_children(children.clone())];
                forest.extend(tail.iter().cloned());
                out.push(forest);
            }
        }
    }
    out
}

fn count_blocks(bs: &[Block]) -> usize {
    bs.iter().map(|b| 1 + count_blocks(&b.children)).sum()
}

fn set_exponents(bs: &mut [Block], digits: &mut impl Iterator<Item = i64>) {
    for b in bs {
        b.exponent = digits.next().expect("one digit per block");
        set_exponents(&mut b.children, digits);
    }
}

/// Every nonnegative tree with `n` chords, depth at most 3, exponents in 0..=2.
fn grid_trees(n: usize) -> Vec<TwistTree> {
    let mut out = Vec::new();
    for shape in shapes(1, n as u32, 3, None) {
        let k = count_blocks(&shape);
        for code in 0..3usize.pow(k as u32) {
            let mut digits = (0..k).map(|i| (code / 3usize.pow(i as u32) % 3) as i64);
            let mut roots = shape.clone();
            set_exponents(&mut roots, &mut digits);
            out.push(TwistTree::new(n, roots));
        }
    }
    out
}

const FRAMINGS: std::ops::RangeInclusive<i64> = -4..=6;

fn slack_equivalence() -> Outcome {
    // r_j depends only on the blocks over chord j and on m_j, so each
    // (tree, chord, m_j) cell is evaluated once and the framing vectors are
    // counted exactly from the per-chord tallies.
    let mut points: u128 = 0;
    let mut discrepancies: u128 = 0;
    let mut trees_with_discrepancy = 0usize;
    let mut total_trees = 0usize;
    let mut example: Option<String> = None;
    let (mut positive_only, mut slack_only) = (0u128, 0u128);
    for n in 1..=4 {
        for tree in grid_trees(n) {
            total_trees += 1;
            let mut cells = vec![Vec::new(); n];
            for m in FRAMINGS {
                let ft = FramedTwistTree::new(tree.clone(), vec![m; n]).expect("framing length");
                let p = relators_from_tree(&ft).expect("valid grid tree");
                let slack = positivity_slack(&ft).expect("valid grid tree");
                for j in 0..n {
                    let positive = p.relators()[j].is_positive();
                    cells[j].push((positive, slack[j] >= 0));
                    if positive != (slack[j] >= 0) && example.is_none() {
                        let r = &p.relators()[j];
                        let shown = if r.is_identity() {
                            "1".to_string()
                        } else {
                            r.to_string()
                        };
                        example = Some(format!("{}with m{} = {m}: r{} = {shown}", tree, j + 1, j + 1));
                    }
                }
            }
            let prod = |f: &dyn Fn(&(bool, bool)) -> bool| -> u128 {
                cells
                    .iter()
                    .map(|c| c.iter().filter(|x| f(x)).count() as u128)
                    .product()
            };
            let pos = prod(&|c| c.0);
            let slack_ok = prod(&|c| c.1);
            let both = prod(&|c| c.0 && c.1);
            let d = pos + slack_ok - 2 * both;
            positive_only += pos - both;
            slack_only += slack_ok - both;
            points += (FRAMINGS.count() as u128).pow(n as u32);
            discrepancies += d;
            if d > 0 {
                trees_with_discrepancy += 1;
            }
        }
    }
    // locality check: direct evaluation of every framing vector for n <= 2
    let mut direct: u128 = 0;
    let mut factored: u128 = 0;
    for n in 1..=2usize {
        for tree in grid_trees(n) {
            let framings: Vec<Vec<i64>> = if n == 1 {
                FRAMINGS.map(|a| vec![a]).collect()
            } else {
                FRAMINGS.flat_map(|a| FRAMINGS.map(move |b| vec![a, b])).collect()
            };
            for m in framings {
                let ft = FramedTwistTree::new(tree.clone(), m).expect("framing length");
                let positive = relators_from_tree(&ft).unwrap().is_positive();
                let slack_ok = positivity_slack(&ft).unwrap().iter().all(|&s| s >= 0);
                direct += (positive != slack_ok) as u128;
            }
            let mut cells = vec![Vec::new(); n];
            for m in FRAMINGS {
                let ft = FramedTwistTree::new(tree.clone(), vec![m; n]).unwrap();
                let p = relators_from_tree(&ft).unwrap();
                let s = positivity_slack(&ft).unwrap();
                for j in 0..n {
                    cells[j].push((p.relators()[j].is_positive(), s[j] >= 0));
                }
            }
            let prod = |f: &dyn Fn(&(bool, bool)) -> bool| -> u128 {
                cells
                    .iter()
                    .map(|c| c.iter().filter(|x| f(x)).count() as u128)
                    .product()
            };
            factored += prod(&|c| c.0) + prod(&|c| c.1) - 2 * prod(&|c| c.0 && c.1);
        }
    }
    let mut detail = format!(
        "{total_trees} trees, {points} (tree, framing) points, {discrepancies} discrepancies in {trees_with_discrepancy} trees \
         ({positive_only} positive with negative slack, {slack_only} nonpositive with nonnegative slack)"
    );
    if direct != factored {
        detail.push_str(&format!("; locality check disagrees ({direct} vs {factored})"));
    }
    if let Some(e) = example {
        detail.push_str(&format!("; first: {}", e.replace('\n', " ")));
    }
    outcome(discrepancies == 0 && direct == factored, detail)
}

fn small3_equivalence() -> Outcome {
    let mut points = 0usize;
    let mut mismatches = Vec::new();
    for e1 in -2..=3i64 {
        for f1 in -2..=3i64 {
            if e1 != 0 && f1 != 0 {
                continue;
            }
            for e in 0..=3i64 {
                for m1 in -3..=5 {
                    for m2 in -3..=5 {
                        for m3 in -3..=5 {
                            let m = [m1, m2, m3];
                            points += 1;
                            let v = classify_small3(e1, f1, e, m).expect("small values");
                            let positive = relators_small3(e, e1, f1, m).expect("small values").is_positive();
                            if v.admissible != positive {
                                mismatches.push((e1, f1, e, m, positive));
                            }
                        }
                    }
                }
            }
        }
    }
    let rejected = mismatches.iter().filter(|m| m.4).count();
    let mut detail = format!(
        "{points} points, {} mismatches ({rejected} positive but inadmissible, {} admissible but not positive)",
        mismatches.len(),
        mismatches.len() - rejected
    );
    if let Some((e1, f1, e, m, positive)) = mismatches.first() {
        detail.push_str(&format!(
            "; first: e1={e1} f1={f1} e={e} m={m:?} is {} but classified {}",
            if *positive { "positive" } else { "not positive" },
            if *positive { "inadmissible" } else { "admissible" },
        ));
    }
    outcome(mismatches.is_empty(), detail)
}

fn composition_example() -> Outcome {
    let (s, r) = presets::compose_example();
    // conjugate indices of each relator as printed: r1^s = (s1^-1 x1 s1)(s2^-1 x2 s2)...
    let printed: [&[u32]; 3] = [&[1, 2, 3, 1, 1], &[1, 2, 3, 2, 3, 2], &[1, 2, 3, 2, 3, 3]];
    let s_words = ["x1 x2 x3 x1", "x1 x2 x3 x2^2", "x1 x2 x3^2"].map(|t| Word::parse(t, 3).unwrap());
    let mut ok = true;
    let mut expansions = Vec::new();
    for (i, idx) in printed.iter().enumerate() {
        let mut expected: Vec<Letter> = Vec::new();
        for &j in idx.iter() {
            let sj = &s_words[j as usize - 1];
            expected.extend(sj.inverse().letters());
            expected.push(Letter::pos(j));
            expected.extend(sj.letters());
        }
        let got = conjugate_expansion(&r.relators()[i], s.relators()).unwrap();
        ok &= got == expected;
        expansions.push(Word::reduce(expected, 3).unwrap());
    }
    ok &= substitute_conjugates(r.relators(), s.relators()).unwrap() == expansions;
    let composed = s.compose(&r).unwrap();
    let expected: Vec<Word> = s_words
        .iter()
        .zip(&expansions)
        .map(|(si, ri)| si.concat(ri).unwrap())
        .collect();
    ok &= composed.relators() == expected.as_slice();
    let artin = composed.verify_artin();
    outcome(
        ok && artin,
        format!(
            "expansions {}, composite Artin: {artin}",
            if ok { "match letter for letter" } else { "differ" }
        ),
    )
}

fn delta_calculation() -> Outcome {
    let mut cases = 0;
    let mut bad = 0;
    for k1 in 1..=4u32 {
        for k2 in 1..=4u32 {
            let n = (k1 + k2 + 2) as usize;
            for e1 in -3..=3 {
                for e2 in -3..=3 {
                    cases += 1;
                    let d1 = ArtinPresentation::block_twist(n, 1, k1, e1).unwrap();
                    let d2 = ArtinPresentation::block_twist(n, k1 + 1, k1 + k2, e2).unwrap();
                    let a = Word::interval_product(1, k1, n).unwrap().power(e1);
                    let b = Word::interval_product(k1 + 1, k1 + k2, n).unwrap().power(e2);
                    let printed: Vec<Word> = (1..=n as u32)
                        .map(|j| match j {
                            j if j <= k1 => a.clone(),
                            j if j <= k1 + k2 => b.clone(),
                            _ => Word::identity(n),
                        })
                        .collect();
                    let composed = d2.compose(&d1).unwrap();
                    if composed.relators() != printed.as_slice() || !composed.verify_artin() {
                        bad += 1;
                    }
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!("{cases} cases, {bad} differing from the concatenated form"),
    )
}

fn three_torus() -> Outcome {
    let p = presets::three_torus();
    let ab = p.abelianization::<i64>();
    let pass = p.verify_artin() && !p.is_positive() && ab.free_rank == 3 && ab.torsion().is_empty();
    outcome(
        pass,
        format!(
            "artin {}, positive {}, free rank {}, torsion {:?}",
            p.verify_artin(),
            p.is_positive(),
            ab.free_rank,
            ab.torsion()
        ),
    )
}

fn n2_completeness() -> Outcome {
    let opts = EnumOptions::default();
    let start = Instant::now();
    let first = enumerate_positive(2, 10, opts).expect("within default bound");
    let elapsed = start.elapsed();
    let second = enumerate_positive(2, 10, opts).expect("within default bound");
    let outside: Vec<&ArtinPresentation> = first.iter().filter(|p| !matches_family_n2(p).expect("n = 2")).collect();
    let all_artin = first.iter().all(|p| p.verify_artin() && p.is_positive());
    let mut modes_agree = true;
    for len in 0..=6 {
        let reference = EnumOptions {
            mode: EnumMode::Reference,
            ..opts
        };
        let a = enumerate_positive(2, len, opts).unwrap();
        let b = enumerate_positive(2, len, reference).unwrap();
        modes_agree &= a == b;
    }
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool")
        .install(|| enumerate_positive(2, 10, opts).unwrap());
    let stable = first == second && first == single;
    let mut detail = format!(
        "{} presentations in {:.2?}, {} outside the family, runs identical: {stable}, pruned = reference up to 6: {modes_agree}",
        first.len(),
        elapsed,
        outside.len()
    );
    if let Some(p) = outside.first() {
        detail.push_str(&format!("; first outside: ({}, {})", p.relator(1), p.relator(2)));
    }
    debug_assert!(default_max_len(2) >= 10);
    outcome(
        outside.is_empty() && all_artin && stable && modes_agree && elapsed < Duration::from_secs(300),
        detail,
    )
}

fn purity_and_sign() -> Outcome {
    let mut trees: Vec<TwistTree> = suite_trees().into_iter().map(|ft| ft.tree).collect();
    let mut g = TreeGenerator::new(
        SUITE_SEED ^ 1,
        TreeConfig {
            negative_rate: 0.0,
            ..TreeConfig::default()
        },
    );
    trees.extend((0..500).map(|_| g.tree()));
    let mut impure = 0;
    let mut signed = 0;
    let mut nonneg = 0;
    for t in &trees {
        let w = t.braid_word().expect("valid tree");
        if !w.is_pure() {
            impure += 1;
        }
        if t.all_nonnegative() {
            nonneg += 1;
            if w.crossing_signs().negative != 0 {
                signed += 1;
            }
        }
    }
    outcome(
        impure == 0 && signed == 0,
        format!(
            "{} trees, {impure} impure; {nonneg} nonnegative trees, {signed} with negative letters",
            trees.len()
        ),
    )
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize) -> Word {
    let len = rng.gen_range(0..=24);
    let raw: Vec<Letter> = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..=rank as u32), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    Word::reduce(raw, rank).unwrap()
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ 2);
    let mut failures = [0usize; 3];
    for _ in 0..1000 {
        let rank = rng.gen_range(1..=6);
        let w = random_word(&mut rng, rank);
        if Word::parse(&w.to_string(), rank).ok() != Some(w) {
            failures[0] += 1;
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let p = ArtinPresentation::new((0..n).map(|_| random_word(&mut rng, n)).collect()).unwrap();
        if ArtinPresentation::parse(&p.to_string()).ok() != Some(p) {
            failures[1] += 1;
        }
    }
    let mut g = TreeGenerator::new(SUITE_SEED ^ 3, TreeConfig::default());
    for _ in 0..1000 {
        let ft = g.framed();
        if FramedTwistTree::parse(&ft.to_string()).ok() != Some(ft) {
            failures[2] += 1;
        }
    }
    outcome(
        failures == [0, 0, 0],
        format!(
            "1000 each; failures: words {}, presentations {}, twist trees {}",
            failures[0], failures[1], failures[2]
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "Artin closure of random framed trees",
            artin_closure,
            Duration::from_secs(10),
        ),
        (
            "slack criterion on the nonnegative tree grid",
            slack_equivalence,
            Duration::from_secs(30),
        ),
        ("three-box classification", small3_equivalence, Duration::from_secs(60)),
        ("composition example", composition_example, Duration::from_secs(10)),
        ("block-twist composition", delta_calculation, Duration::from_secs(10)),
        ("3-torus preset", three_torus, Duration::from_secs(10)),
        ("two-generator completeness", n2_completeness, Duration::from_secs(300)),
        ("purity and crossing signs", purity_and_sign, Duration::from_secs(10)),
        ("text round trips", round_trips, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if took > *budget {
            o.pass = false;
            o.detail.push_str(&format!("; over the {budget:?} budget"));
        }
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} - {name}: {} [{took:.2?}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
