//! Release gate: every blocking behavior checked in one run, one printed
//! PASS/FAIL line per criterion.  Sample sizes and time budgets are pinned
//! as constants next to each check; a criterion that cannot be met fails
//! loudly rather than being weakened.
//!
//! This target uses `harness = false` so the lines print unconditionally
//! and the criteria run sequentially, keeping the wall-clock budgets fair.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braidconj::testkit::{
    brute_commuting_words, brute_conjugate_set, brute_conjugator, brute_summit_closure,
    words_of_length,
};
use braidconj::{
    affine_a_context, bn_x_context, build_chain, centralizer_generators,
    conjugate_in_braid_group, equals, ib_context, strand_deletion, summit_set, type_b_context,
    verify_homomorphism, BraidWord, Error, KElement, NormalForm, Permutation, PhiMap,
};

type Outcome = Result<String, String>;

fn word(strands: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(strands, letters.to_vec()).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen::<bool>() {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

/// Rejection-samples a word whose permutation fixes the given strands.
fn random_word_fixing(
    rng: &mut ChaCha8Rng,
    strands: usize,
    max_len: usize,
    points: &[usize],
) -> BraidWord {
    loop {
        let w = random_word(rng, strands, max_len);
        if w.strand_permutation().fixes(points.iter().copied()).unwrap() {
            return w;
        }
    }
}

fn integer_image(map: &PhiMap, w: &BraidWord) -> i64 {
    match map.apply(w).expect("image defined on subgroup members") {
        KElement::Int(z) => z,
        KElement::Perm(_) => panic!("integer-valued map"),
    }
}

/// 500 random conjugate pairs in B_4 must each come back with a conjugator
/// that passes an independent word-problem check.
fn ambient_certificates_are_sound() -> Outcome {
    const PAIRS: usize = 500;
    const MAX_A: usize = 8;
    const MAX_C: usize = 6;
    const BUDGET: Duration = Duration::from_secs(120);
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..PAIRS {
        let a = random_word(&mut rng, 4, MAX_A);
        let c = random_word(&mut rng, 4, MAX_C);
        let b = a.conjugated_by(&c).unwrap();
        let cert = conjugate_in_braid_group(&a, &b)
            .map_err(|e| format!("pair {k}: {e}"))?
            .ok_or_else(|| format!("pair {k}: constructed conjugates reported non-conjugate"))?;
        if !equals(&a.conjugated_by(&cert.conjugator).unwrap(), &b).unwrap() {
            return Err(format!("pair {k}: conjugator fails the word problem"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > BUDGET {
        return Err(format!("{PAIRS} pairs took {elapsed:.1?}, budget {BUDGET:?}"));
    }
    Ok(format!("{PAIRS}/{PAIRS} certificates verified in {:.1}s (budget 120s)", elapsed.as_secs_f64()))
}

/// For every word of length <= 5 in B_3, the summit set must equal the
/// closure computed by undirected conjugation under all simple elements.
fn summit_sets_equal_brute_closures() -> Outcome {
    let mut checked = 0usize;
    for len in 0..=5 {
        for w in words_of_length(3, len) {
            let vertices: BTreeSet<NormalForm> = summit_set(&w).vertices.into_iter().collect();
            let closure = brute_summit_closure(&w).map_err(|e| e.to_string())?;
            if vertices != closure {
                return Err(format!("summit mismatch for word {w:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} words agree with the brute closure"))
}

/// 300 random conjugate pairs inside B_4 fixing strand 1: the decision must
/// say TRUE with a conjugator that both conjugates correctly and stays in
/// the subgroup.
fn subgroup_decisions_are_sound() -> Outcome {
    const PAIRS: usize = 300;
    const MAX_A: usize = 8;
    const MAX_C: usize = 6;
    const BUDGET: Duration = Duration::from_secs(300);
    let start = Instant::now();
    let ctx = bn_x_context(4, &[1].into_iter().collect()).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..PAIRS {
        let a = random_word_fixing(&mut rng, 4, MAX_A, &[1]);
        let c = random_word_fixing(&mut rng, 4, MAX_C, &[1]);
        let b = a.conjugated_by(&c).unwrap();
        let cert = ctx
            .conjugate(&a, &b)
            .map_err(|e| format!("pair {k}: {e}"))?
            .ok_or_else(|| format!("pair {k}: conjugate subgroup pair reported non-conjugate"))?;
        let h = &cert.conjugator;
        if !equals(&a.conjugated_by(h).unwrap(), &b).unwrap() {
            return Err(format!("pair {k}: conjugator fails the word problem"));
        }
        if !h.strand_permutation().fixes([1]).unwrap() {
            return Err(format!("pair {k}: conjugator moves strand 1"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > BUDGET {
        return Err(format!("{PAIRS} pairs took {elapsed:.1?}, budget {BUDGET:?}"));
    }
    Ok(format!("{PAIRS}/{PAIRS} pairs decided TRUE with in-subgroup conjugators in {:.1}s (budget 300s)", elapsed.as_secs_f64()))
}

/// Exhaustive completeness at desk scale, in B_3 fixing strand 3: whenever
/// a brute-force search over constrained words of length <= 6 finds a
/// conjugator between two subgroup elements of length <= 4, the decision
/// procedure must answer TRUE.
fn subgroup_decisions_are_complete() -> Outcome {
    const WORD_LEN: usize = 4;
    const WITNESS_LEN: usize = 6;
    let ctx = bn_x_context(3, &[3].into_iter().collect()).map_err(|e| e.to_string())?;
    let fixes3 = |p: &Permutation| p.fixes([3]).unwrap();

    // One representative word per braid among the subgroup's short words.
    let mut classes: BTreeMap<NormalForm, BraidWord> = BTreeMap::new();
    for len in 0..=WORD_LEN {
        for w in words_of_length(3, len) {
            if fixes3(&w.strand_permutation()) {
                classes.entry(w.normal_form()).or_insert(w);
            }
        }
    }
    let reps: Vec<(NormalForm, BraidWord)> = classes.into_iter().collect();
    let sets: Vec<BTreeSet<NormalForm>> = reps
        .iter()
        .map(|(_, w)| brute_conjugate_set(w, WITNESS_LEN, Some(&fixes3)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;

    let mut witnessed = 0usize;
    let mut spot_checked = 0usize;
    for (ia, (_, wa)) in reps.iter().enumerate() {
        for (ib, (nf_b, wb)) in reps.iter().enumerate() {
            let has_witness = sets[ia].contains(nf_b);
            if (ia * 31 + ib) % 41 == 0 {
                // The precomputed conjugate sets must agree with the direct
                // witness search they replace.
                let direct = brute_conjugator(wa, wb, WITNESS_LEN, Some(&fixes3))
                    .map_err(|e| e.to_string())?;
                if direct.is_some() != has_witness {
                    return Err(format!("oracle disagreement on pair ({ia}, {ib})"));
                }
                spot_checked += 1;
            }
            if !has_witness {
                continue;
            }
            witnessed += 1;
            let cert = ctx
                .conjugate(wa, wb)
                .map_err(|e| format!("pair ({ia}, {ib}): {e}"))?
                .ok_or_else(|| format!("pair ({ia}, {ib}): witnessed pair decided FALSE"))?;
            if !cert.verify().map_err(|e| e.to_string())? {
                return Err(format!("pair ({ia}, {ib}): certificate fails verification"));
            }
            if !ctx.contains(&cert.conjugator).map_err(|e| e.to_string())? {
                return Err(format!("pair ({ia}, {ib}): conjugator leaves the subgroup"));
            }
        }
    }
    Ok(format!(
        "{witnessed} witnessed pairs over {} classes all decided TRUE ({spot_checked} oracle spot checks)",
        reps.len()
    ))
}

/// The two distinguished negatives: a generator is not conjugate to its
/// inverse, and the squared generators of B_3 separate inside the subgroup
/// fixing strand 3 even though they are conjugate in the full group.
fn negative_answers_are_faithful() -> Outcome {
    let s1 = word(3, &[1]);
    let s1_inv = word(3, &[-1]);
    if conjugate_in_braid_group(&s1, &s1_inv).map_err(|e| e.to_string())?.is_some() {
        return Err("a generator was declared conjugate to its inverse".into());
    }

    let ctx = bn_x_context(3, &[3].into_iter().collect()).map_err(|e| e.to_string())?;
    if ctx.conjugate(&s1, &s1_inv).map_err(|e| e.to_string())?.is_some() {
        return Err("the subgroup decision missed the ambient negative".into());
    }

    let a = word(3, &[1, 1]);
    let b = word(3, &[2, 2]);
    let ambient = conjugate_in_braid_group(&a, &b)
        .map_err(|e| e.to_string())?
        .ok_or("the squared generators must be conjugate in the full group")?;
    if !ambient.verify().map_err(|e| e.to_string())? {
        return Err("the ambient certificate fails verification".into());
    }
    if ctx.conjugate(&a, &b).map_err(|e| e.to_string())?.is_some() {
        return Err("the squared generators must separate in the subgroup".into());
    }
    let fixes3 = |p: &Permutation| p.fixes([3]).unwrap();
    if brute_conjugator(&a, &b, 8, Some(&fixes3)).map_err(|e| e.to_string())?.is_some() {
        return Err("brute search found a constrained conjugator that must not exist".into());
    }
    Ok("generator/inverse FALSE; squared generators TRUE ambient, FALSE in subgroup, \
        cross-checked by brute search to length 8"
        .into())
}

/// Centralizer generating sets: always commute; for the full twist they
/// generate a subgroup whose permutation image is all of the symmetric
/// group; and for every short B_3 word they cover every short commuting
/// word up to permutation image.
fn centralizers_commute_and_cover() -> Outcome {
    const RANDOM_WORDS: usize = 100;
    const MAX_LEN: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for k in 0..RANDOM_WORDS {
        let a = random_word(&mut rng, 4, MAX_LEN);
        let nf_a = a.normal_form();
        for g in centralizer_generators(&a) {
            let nf_g = g.normal_form();
            if nf_a.mul(&nf_g).unwrap() != nf_g.mul(&nf_a).unwrap() {
                return Err(format!("word {k}: generator {g:?} does not commute with {a:?}"));
            }
        }
    }

    let full_twist = NormalForm::delta_power(4, 2).to_word();
    let images: Vec<Permutation> =
        centralizer_generators(&full_twist).iter().map(BraidWord::strand_permutation).collect();
    let chain = build_chain(&images).map_err(|e| e.to_string())?;
    if chain.order() != 24 {
        return Err(format!(
            "the full twist centralizer has permutation image of order {}, expected 24",
            chain.order()
        ));
    }

    let mut covered = 0usize;
    let mut seen: BTreeSet<NormalForm> = BTreeSet::new();
    for len in 0..=4 {
        for a in words_of_length(3, len) {
            if !seen.insert(a.normal_form()) {
                continue;
            }
            let images: Vec<Permutation> =
                centralizer_generators(&a).iter().map(BraidWord::strand_permutation).collect();
            let chain = build_chain(&images).map_err(|e| e.to_string())?;
            for c in brute_commuting_words(&a, 4).map_err(|e| e.to_string())? {
                if !chain.contains(&c.strand_permutation()).map_err(|e| e.to_string())? {
                    return Err(format!(
                        "commuting word {c:?} has permutation outside the centralizer image of {a:?}"
                    ));
                }
                covered += 1;
            }
        }
    }
    Ok(format!(
        "{RANDOM_WORDS} random centralizers commute; full-twist image order 24; \
         {covered} commuting words covered"
    ))
}

/// The generator dictionaries for the realized Artin groups satisfy their
/// defining relations, and the affine generators all lie in the kernel of
/// the integer twist map.
fn realizations_satisfy_their_presentations() -> Outcome {
    for n in [2, 3, 4] {
        let tb = type_b_context(n).map_err(|e| format!("type B rank {n}: {e}"))?;
        if !verify_homomorphism(tb.presentation(), tb.generator_images(), tb.context())
            .map_err(|e| e.to_string())?
        {
            return Err(format!("type B rank {n}: a relation fails"));
        }
    }
    let twist = PhiMap::StrandLinking { strand: 1 };
    for n in [3, 4] {
        let affine = affine_a_context(n).map_err(|e| format!("affine A rank {n}: {e}"))?;
        if !verify_homomorphism(affine.presentation(), affine.generator_images(), affine.context())
            .map_err(|e| e.to_string())?
        {
            return Err(format!("affine A rank {n}: a relation fails"));
        }
        for (k, image) in affine.generator_images().iter().enumerate() {
            if integer_image(&twist, image) != 0 {
                return Err(format!("affine A rank {n}: generator {} twists strand 1", k + 1));
            }
        }
    }
    Ok("type B ranks 2-4 and affine A ranks 3-4 verified; affine generators have zero twist".into())
}

/// Random conjugate pairs in the two stacked contexts — the affine A group
/// inside type B, and the twice-punctured-disc braid group — are decided
/// TRUE with conjugators in the kernel of the respective integer map.
fn stacked_contexts_solve_random_pairs() -> Outcome {
    const PAIRS: usize = 100;
    const BUDGET: Duration = Duration::from_secs(300);
    let start = Instant::now();

    let affine = affine_a_context(3).map_err(|e| e.to_string())?;
    let twist = PhiMap::StrandLinking { strand: 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let artin_word = |rng: &mut ChaCha8Rng, max_len: usize| {
        let len = rng.gen_range(0..=max_len);
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..=3);
                if rng.gen::<bool>() {
                    g
                } else {
                    -g
                }
            })
            .collect::<Vec<i32>>()
    };
    for k in 0..PAIRS {
        let a = affine.map_word(&artin_word(&mut rng, 5)).unwrap();
        let c = affine.map_word(&artin_word(&mut rng, 4)).unwrap();
        let b = a.conjugated_by(&c).unwrap();
        let cert = affine
            .context()
            .conjugate(&a, &b)
            .map_err(|e| format!("affine pair {k}: {e}"))?
            .ok_or_else(|| format!("affine pair {k}: decided FALSE"))?;
        if !cert.verify().map_err(|e| e.to_string())? {
            return Err(format!("affine pair {k}: certificate fails verification"));
        }
        if integer_image(&twist, &cert.conjugator) != 0 {
            return Err(format!("affine pair {k}: conjugator has non-zero twist"));
        }
    }

    // Generators of the twice-punctured-disc group as blocks: every block
    // fixes strands 1 and 2 and adds no twist between them.
    let blocks: &[&[i32]] = &[
        &[3],
        &[-3],
        &[2, 2],
        &[-2, -2],
        &[2, 1, 1, -2],
        &[-2, -1, -1, 2],
    ];
    let ib = ib_context(4, 2).map_err(|e| e.to_string())?;
    let block_word = |rng: &mut ChaCha8Rng, max_blocks: usize| {
        let count = rng.gen_range(0..=max_blocks);
        let letters = (0..count)
            .flat_map(|_| blocks[rng.gen_range(0..blocks.len())].iter().copied())
            .collect();
        BraidWord::new(4, letters).unwrap()
    };
    for k in 0..PAIRS {
        let a = block_word(&mut rng, 4);
        let c = block_word(&mut rng, 3);
        let b = a.conjugated_by(&c).unwrap();
        let cert = ib
            .conjugate(&a, &b)
            .map_err(|e| format!("disc pair {k}: {e}"))?
            .ok_or_else(|| format!("disc pair {k}: decided FALSE"))?;
        if !cert.verify().map_err(|e| e.to_string())? {
            return Err(format!("disc pair {k}: certificate fails verification"));
        }
        if strand_deletion(&cert.conjugator, 2).map_err(|e| e.to_string())? != 0 {
            return Err(format!("disc pair {k}: conjugator twists the punctures"));
        }
    }

    let elapsed = start.elapsed();
    if elapsed > BUDGET {
        return Err(format!("2x{PAIRS} pairs took {elapsed:.1?}, budget {BUDGET:?}"));
    }
    Ok(format!(
        "{PAIRS} affine and {PAIRS} punctured-disc pairs decided TRUE with zero-twist \
         conjugators in {:.1}s (budget 300s)",
        elapsed.as_secs_f64()
    ))
}

/// Inputs with no sound method are refused with the right error, both in
/// the library and through the command line (exit code 2).
fn unsupported_inputs_are_refused() -> Outcome {
    match ib_context(9, 5) {
        Err(Error::NoValidTriple { m: 5 }) => {}
        other => return Err(format!("5 punctures: expected the impossibility error, got {other:?}")),
    }
    for m in [3, 4] {
        match ib_context(5, m) {
            Err(Error::NoKnownMethod { m: got }) if got == m => {}
            other => return Err(format!("{m} punctures: expected no-known-method, got {other:?}")),
        }
    }

    let affine = affine_a_context(3).map_err(|e| e.to_string())?;
    let a = affine.map_word(&[1]).unwrap();
    match affine.context().centralizer(&a) {
        Err(Error::InfiniteIndex) => {}
        other => return Err(format!("affine centralizer: expected infinite index, got {other:?}")),
    }

    let cli = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_braidconj")).args(args).output().expect("binary runs")
    };
    let out = cli(&["subconj", "--group", "IBn", "--punctures", "5", "--strands", "9", "1", "1"]);
    if out.status.code() != Some(2) {
        return Err(format!("CLI with 5 punctures exited {:?}, expected 2", out.status.code()));
    }
    if !String::from_utf8_lossy(&out.stderr).contains("no valid") {
        return Err("CLI with 5 punctures did not explain the impossibility".into());
    }
    let out = cli(&["centralizer", "--group", "affineA", "--strands", "4", "1"]);
    if out.status.code() != Some(2) {
        return Err(format!("CLI affine centralizer exited {:?}, expected 2", out.status.code()));
    }
    if !String::from_utf8_lossy(&out.stderr).contains("infinite index") {
        return Err("CLI affine centralizer did not mention the infinite index".into());
    }
    Ok("library refusals carry the right errors; CLI surfaces them with exit code 2".into())
}

fn main() {
    let criteria: &[(&str, fn() -> Outcome)] = &[
        ("1 ambient certificate soundness", ambient_certificates_are_sound),
        ("2 summit sets vs brute closure", summit_sets_equal_brute_closures),
        ("3 subgroup decision soundness", subgroup_decisions_are_sound),
        ("4 subgroup decision completeness", subgroup_decisions_are_complete),
        ("5 faithful negatives", negative_answers_are_faithful),
        ("6 centralizer properties", centralizers_commute_and_cover),
        ("7 realization verification", realizations_satisfy_their_presentations),
        ("8 stacked contexts", stacked_contexts_solve_random_pairs),
        ("9 refusal paths", unsupported_inputs_are_refused),
    ];
    let mut failures = 0usize;
    for (name, criterion) in criteria {
        let started = Instant::now();
        match catch_unwind(AssertUnwindSafe(criterion)) {
            Ok(Ok(detail)) => {
                println!("PASS {name}: {detail} [{:.1}s]", started.elapsed().as_secs_f64());
            }
            Ok(Err(why)) => {
                failures += 1;
                println!("FAIL {name}: {why}");
            }
            Err(panic) => {
                failures += 1;
                let why = panic
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| panic.downcast_ref::<&str>().copied())
                    .unwrap_or("panicked");
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
