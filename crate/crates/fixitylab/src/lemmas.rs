//! Executable structural checks against transitive actions: normalizer and
//! centralizer index bounds, the minimal-normal dichotomy, quotient fixity
//! bounds, fixed-point distribution constraints, and sufficient conditions
//! for a regular normal subgroup.
//!
//! Each check evaluates its hypotheses first; inapplicable inputs are
//! reported as SKIPPED with the failed hypothesis named, never silently
//! dropped. A FAILS status on hypothesis-satisfying input is a violation.

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify_fixity2, ClassifyError};
use crate::fixity::{
    fixity_profile, is_frobenius_action, is_regular, semiregular_on, ActionInstance,
};
use crate::group::{GroupError, Subgroup};
use crate::structure::NamedGroupTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaStatus {
    Holds,
    Fails,
    Skipped,
}

/// Result of one structural check. `evidence` is a structured record of the
/// quantities compared.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheckResult {
    pub lemma: String,
    pub status: LemmaStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped_hypothesis: Option<String>,
    pub evidence: Value,
}

impl LemmaCheckResult {
    fn holds(lemma: &str, evidence: Value) -> Self {
        LemmaCheckResult {
            lemma: lemma.to_owned(),
            status: LemmaStatus::Holds,
            skipped_hypothesis: None,
            evidence,
        }
    }

    fn fails(lemma: &str, evidence: Value) -> Self {
        LemmaCheckResult {
            lemma: lemma.to_owned(),
            status: LemmaStatus::Fails,
            skipped_hypothesis: None,
            evidence,
        }
    }

    fn skipped(lemma: &str, hypothesis: &str) -> Self {
        LemmaCheckResult {
            lemma: lemma.to_owned(),
            status: LemmaStatus::Skipped,
            skipped_hypothesis: Some(hypothesis.to_owned()),
            evidence: Value::Null,
        }
    }

    pub fn holds_or_skipped(&self) -> bool {
        self.status != LemmaStatus::Fails
    }
}

/// Normalizer/centralizer index bounds and the center-order divisibility for
/// a transitive action of fixity `k >= 1`:
/// for every nonidentity `x` in a point stabilizer, the index of the
/// stabilizer-normalizer (resp. -centralizer) of `<x>` (resp. `x`) in the full
/// normalizer (resp. centralizer) is at most `k`; when the fixed-point set of
/// `x` is exactly `{alpha}` the full subgroup lies in the stabilizer; and
/// `|Z(G)|` divides `k`.
pub fn check_normalizer_bounds(
    a: &ActionInstance,
    k: u32,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "normaliser-bounds";
    if !a.is_transitive_on_domain() {
        return Err(ClassifyError::Precondition {
            failed: vec!["action is not transitive".to_owned()],
        });
    }
    let actual = fixity_profile(a)?.fixity;
    if actual != k || k < 1 {
        return Err(ClassifyError::Precondition {
            failed: vec![format!("fixity is {actual}, expected {k} >= 1")],
        });
    }
    let g = a.group();
    let alpha = a.domain()[0];
    let stab = g.point_stabilizer(alpha)?;
    let center_order = g.center()?.order() as u64;
    let center_divides = (k as u64).is_multiple_of(center_order);

    let mut max_centralizer_index = 0u64;
    let mut max_normalizer_index = 0u64;
    let mut sharpened_ok = true;
    let mut checked = 0u64;
    for x in stab.group().elements()? {
        if x.is_identity() {
            continue;
        }
        checked += 1;
        // index |C_G(x) : C_{G_alpha}(x)| equals the orbit length of alpha
        // under C_G(x), by orbit-stabilizer; same for the normalizer of <x>.
        let centralizer = g.centralizer(x)?;
        let c_index = centralizer.group().orbit_of(alpha)?.len() as u64;
        max_centralizer_index = max_centralizer_index.max(c_index);
        let x_subgroup = Subgroup::new(g, vec![x.clone()])?;
        let normalizer = g.normalizer(&x_subgroup)?;
        let n_index = normalizer.group().orbit_of(alpha)?.len() as u64;
        max_normalizer_index = max_normalizer_index.max(n_index);

        let fix = a.fixed_points(x);
        if fix == [alpha] {
            // fix(<x>) = fix(x) for cyclic subgroups
            if c_index != 1 || n_index != 1 {
                sharpened_ok = false;
            }
        }
    }
    let holds = center_divides
        && max_centralizer_index <= k as u64
        && max_normalizer_index <= k as u64
        && sharpened_ok;
    let evidence = json!({
        "k": k,
        "alpha": alpha,
        "stabilizer_order": stab.order() as u64,
        "elements_checked": checked,
        "center_order": center_order,
        "center_divides": center_divides,
        "max_centralizer_index": max_centralizer_index,
        "max_normalizer_index": max_normalizer_index,
        "sharpened_containments": sharpened_ok,
    });
    Ok(if holds {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// The dichotomy for a minimal normal subgroup of a transitive soluble action
/// of fixity `k` in {2, 3}: either `n` acts semiregularly, or the action is
/// the exceptional configuration (fixity 2: `|N| = 4`, orbits of length 2,
/// degree 6, group ALT4 or SYM4; fixity 3: degree 6, `|N| = 9`, orbits of
/// length 3, group `(C3 x C3) : C4` with SYM3 stabilizers).
pub fn check_minimal_normal_dichotomy(
    a: &ActionInstance,
    n: &Subgroup,
    k: u32,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "minimal-normal-dichotomy";
    check_dichotomy_preconditions(a, n, k)?;
    let g = a.group();
    let semiregular = semiregular_on(a, n);
    let n_orbit_sizes: Vec<usize> = {
        let na = ActionInstance::new(n.group().clone(), a.domain().to_vec())
            .expect("invariant domain");
        na.orbits().iter().map(|o| o.len()).collect()
    };
    let (branch, holds) = if semiregular {
        ("semiregular", true)
    } else {
        match k {
            2 => {
                let ok = n.order() == 4
                    && n_orbit_sizes.iter().all(|&s| s == 2)
                    && a.domain_size() == 6
                    && (g.matches_named_group(NamedGroupTag::Alt4)?
                        || g.matches_named_group(NamedGroupTag::Sym4)?);
                ("exceptional", ok)
            }
            _ => {
                let stab_sym3 = {
                    let stab = g.point_stabilizer(a.domain()[0])?;
                    stab.group().matches_named_group(NamedGroupTag::Sym3)?
                };
                let ok = a.domain_size() == 6
                    && n.order() == 9
                    && n_orbit_sizes.iter().all(|&s| s == 3)
                    && g.matches_named_group(NamedGroupTag::C3xC3ColonC4)?
                    && stab_sym3;
                ("exceptional", ok)
            }
        }
    };
    let evidence = json!({
        "k": k,
        "branch": branch,
        "n_order": n.order() as u64,
        "n_orbit_sizes": n_orbit_sizes,
        "omega": a.domain_size(),
    });
    Ok(if holds {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

fn check_dichotomy_preconditions(
    a: &ActionInstance,
    n: &Subgroup,
    k: u32,
) -> Result<(), ClassifyError> {
    let mut failed = Vec::new();
    if !a.is_transitive_on_domain() {
        failed.push("action is not transitive".to_owned());
    }
    if !a.group().is_soluble() {
        failed.push("group is not soluble".to_owned());
    }
    if !(k == 2 || k == 3) {
        failed.push(format!("k is {k}, expected 2 or 3"));
    } else {
        let actual = fixity_profile(a)?.fixity;
        if actual != k {
            failed.push(format!("fixity is {actual}, expected {k}"));
        }
    }
    if !is_minimal_normal(a, n)? {
        failed.push("subgroup is not minimal normal".to_owned());
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(ClassifyError::Precondition { failed })
    }
}

fn is_minimal_normal(a: &ActionInstance, n: &Subgroup) -> Result<bool, GroupError> {
    let minimals = a.group().minimal_normal_subgroups()?;
    Ok(minimals.iter().any(|m| m.subgroup_eq(n)))
}

/// Quotient fixity bound: for a semiregular minimal normal subgroup of an
/// action of fixity `k` in {2, 3} (with `n` abelian when `k = 2`), the
/// faithful image on the `n`-orbit blocks acts with fixity at most `k`.
/// Evidence records whether the kernel of the block action exceeds `n`.
pub fn check_quotient_fixity_bound(
    a: &ActionInstance,
    n: &Subgroup,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "quotient-fixity-bound";
    let mut failed = Vec::new();
    if !a.is_transitive_on_domain() {
        failed.push("action is not transitive".to_owned());
    }
    if !a.is_natural() {
        failed.push("blocks require the full natural domain".to_owned());
    }
    let k = fixity_profile(a)?.fixity;
    if !(k == 2 || k == 3) {
        failed.push(format!("fixity is {k}, expected 2 or 3"));
    }
    if !is_minimal_normal(a, n)? {
        failed.push("subgroup is not minimal normal".to_owned());
    }
    if k == 2 && !n.group().derived_subgroup().group().is_trivial() {
        failed.push("minimal normal subgroup is not abelian".to_owned());
    }
    if !semiregular_on(a, n) {
        failed.push("minimal normal subgroup is not semiregular".to_owned());
    }
    if !failed.is_empty() {
        return Err(ClassifyError::Precondition { failed });
    }
    let q = a.group().quotient_action(n)?;
    let image_fixity = fixity_profile(&ActionInstance::natural(q.image().clone()))?.fixity;
    let holds = image_fixity <= k;
    let evidence = json!({
        "k": k,
        "block_count": q.block_count(),
        "image_fixity": image_fixity,
        "image_order": q.image().order() as u64,
        "kernel_order": q.kernel().order() as u64,
        "kernel_exceeds_n": q.kernel_exceeds_n(),
    });
    Ok(if holds {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// The supporting fixed-point constraints evaluated against one minimal
/// normal subgroup. Inapplicable checks are reported as SKIPPED with the
/// failed hypothesis named.
pub fn check_supporting_constraints(
    a: &ActionInstance,
    n: &Subgroup,
) -> Result<Vec<LemmaCheckResult>, ClassifyError> {
    let mut out = Vec::new();
    let k = fixity_profile(a)?.fixity;
    let natural = a.is_natural() && a.is_transitive_on_domain();
    if !natural {
        return Err(ClassifyError::Precondition {
            failed: vec!["checks require a transitive natural action".to_owned()],
        });
    }
    if !is_minimal_normal(a, n)? {
        return Err(ClassifyError::Precondition {
            failed: vec!["subgroup is not minimal normal".to_owned()],
        });
    }
    let semiregular = semiregular_on(a, n);
    let q = a.group().quotient_action(n)?;
    let block_count = q.block_count();

    out.push(check_quotient_not_alt4_sym4(a, n, k, semiregular, &q)?);
    out.push(check_three_fixed_in_one_orbit(a, n, k, semiregular, &q)?);
    out.push(check_fixed_point_distribution(a, n, k, semiregular, &q)?);
    out.push(check_zero_two_quotient_order(a, n, k, semiregular, &q)?);
    out.push(check_regular_normal_sufficient(
        a,
        n,
        k,
        semiregular,
        block_count,
        &q,
    )?);
    out.push(check_three_block_structure(a, n, k, semiregular, block_count)?);
    out.push(check_fixity_two_quotient_regular(
        a,
        n,
        k,
        semiregular,
        block_count,
        &q,
    )?);
    Ok(out)
}

fn check_quotient_not_alt4_sym4(
    _a: &ActionInstance,
    n: &Subgroup,
    k: u32,
    semiregular: bool,
    q: &crate::quotient::QuotientAction,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "quotient-not-alt4-sym4";
    if k != 2 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 2"));
    }
    if !n.group().derived_subgroup().group().is_trivial() {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not abelian",
        ));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    if q.block_count() != 6 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "block count is not 6"));
    }
    let image = q.image();
    let is_alt4 = image.matches_named_group(NamedGroupTag::Alt4)?;
    let is_sym4 = image.matches_named_group(NamedGroupTag::Sym4)?;
    let evidence = json!({
        "image_order": image.order() as u64,
        "image_is_alt4": is_alt4,
        "image_is_sym4": is_sym4,
    });
    Ok(if !is_alt4 && !is_sym4 {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// For every element fixing exactly three points, all inside one `n`-orbit:
/// that orbit is the only block the element stabilizes, or `|N|` is 3 or 9.
fn check_three_fixed_in_one_orbit(
    a: &ActionInstance,
    n: &Subgroup,
    k: u32,
    semiregular: bool,
    q: &crate::quotient::QuotientAction,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "three-fixed-in-one-orbit";
    if k != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 3"));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    let g = a.group();
    let mut relevant = 0u64;
    let mut unique_orbit = 0u64;
    let mut small_n = 0u64;
    let mut holds = true;
    for x in g.elements()? {
        if x.is_identity() {
            continue;
        }
        let fix = a.fixed_points(x);
        if fix.len() != 3 {
            continue;
        }
        let blocks: Vec<u32> = fix.iter().map(|&p| q.block_of(p)).collect();
        if blocks.windows(2).any(|w| w[0] != w[1]) {
            continue; // not all in one orbit
        }
        relevant += 1;
        let stabilized = crate::fixity::fixed_blocks(q, x)?;
        if stabilized == [blocks[0]] {
            unique_orbit += 1;
        } else if n.order() == 3 || n.order() == 9 {
            small_n += 1;
        } else {
            holds = false;
        }
    }
    let evidence = json!({
        "elements_with_three_fixed_in_one_orbit": relevant,
        "unique_stabilized_orbit": unique_orbit,
        "n_order_in_three_nine": small_n,
        "n_order": n.order() as u64,
    });
    Ok(if holds {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// Every element with exactly three fixed points has them all in one
/// `n`-orbit or spread over three pairwise distinct `n`-orbits.
fn check_fixed_point_distribution(
    a: &ActionInstance,
    _n: &Subgroup,
    k: u32,
    semiregular: bool,
    q: &crate::quotient::QuotientAction,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "fixed-point-distribution";
    if k != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 3"));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    let g = a.group();
    let mut one_orbit = 0u64;
    let mut three_orbits = 0u64;
    let mut violations = 0u64;
    for x in g.elements()? {
        if x.is_identity() {
            continue;
        }
        let fix = a.fixed_points(x);
        if fix.len() != 3 {
            continue;
        }
        let mut blocks: Vec<u32> = fix.iter().map(|&p| q.block_of(p)).collect();
        blocks.sort_unstable();
        blocks.dedup();
        match blocks.len() {
            1 => one_orbit += 1,
            3 => three_orbits += 1,
            _ => violations += 1,
        }
    }
    let evidence = json!({
        "all_in_one_orbit": one_orbit,
        "three_distinct_orbits": three_orbits,
        "two_one_splits": violations,
    });
    Ok(if violations == 0 {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// If the quotient modulo `n` is a `(0,2)`-group on at least two blocks,
/// `|N|` is 3 or 9.
///
/// The `(0,2)` hypothesis is evaluated on the abstract quotient: fixed-block
/// counts are constant on cosets of `n`, so the quotient profile is the
/// element-level histogram divided by `|N|`. Elements of a kernel strictly
/// larger than `n` count as fixing every block, exactly as cosets do.
fn check_zero_two_quotient_order(
    a: &ActionInstance,
    n: &Subgroup,
    k: u32,
    semiregular: bool,
    q: &crate::quotient::QuotientAction,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "zero-two-quotient-order";
    if k != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 3"));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    if q.block_count() < 2 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fewer than two blocks"));
    }
    let hist = quotient_fixed_block_histogram(a, n, q)?;
    let support: Vec<u32> = hist.keys().copied().collect();
    let is_zero_two = support.iter().all(|&c| c == 0 || c == 2)
        && (support.contains(&2) || support.iter().all(|&c| c == 0));
    if !is_zero_two {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "quotient is not a (0,2)-group on the blocks",
        ));
    }
    let holds = n.order() == 3 || n.order() == 9;
    let evidence = json!({
        "n_order": n.order() as u64,
        "block_count": q.block_count(),
        "quotient_profile": hist,
    });
    Ok(if holds {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// Fixed-block counts of the nonidentity cosets of `n`, as a histogram.
fn quotient_fixed_block_histogram(
    a: &ActionInstance,
    n: &Subgroup,
    q: &crate::quotient::QuotientAction,
) -> Result<std::collections::BTreeMap<u32, u64>, GroupError> {
    let mut hist: std::collections::BTreeMap<u32, u64> = std::collections::BTreeMap::new();
    let reps: Vec<crate::perm::Point> = q.blocks().iter().map(|b| b[0]).collect();
    for g in a.group().elements()? {
        if n.contains(g) {
            continue;
        }
        let fixed = reps
            .iter()
            .enumerate()
            .filter(|&(i, &p)| q.block_of(g.apply(p)) == i as u32 + 1)
            .count() as u32;
        *hist.entry(fixed).or_insert(0) += 1;
    }
    let size = n.order() as u64;
    for v in hist.values_mut() {
        debug_assert_eq!(*v % size, 0);
        *v /= size;
    }
    Ok(hist)
}

/// Sufficient conditions for a regular normal subgroup in the fixity-3
/// setting with a semiregular minimal normal subgroup: `|N| = 3` with
/// degree 9, or at most two blocks, or a block image with a regular normal
/// subgroup.
fn check_regular_normal_sufficient(
    a: &ActionInstance,
    n: &Subgroup,
    k: u32,
    semiregular: bool,
    block_count: u32,
    q: &crate::quotient::QuotientAction,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "regular-normal-sufficient";
    if k != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 3"));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    let mut conditions = Vec::new();
    if n.order() == 3 && a.domain_size() == 9 {
        conditions.push("n_order_3_degree_9");
    }
    if block_count <= 2 {
        conditions.push("at_most_two_blocks");
    }
    if image_has_regular_normal(q)? {
        conditions.push("image_has_regular_normal");
    }
    if conditions.is_empty() {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "no sufficient condition applies",
        ));
    }
    let witness = find_regular_normal(a)?;
    let evidence = json!({
        "conditions": conditions,
        "regular_normal_order": witness.as_ref().map(|w| w.order() as u64),
    });
    Ok(if witness.is_some() {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// With a semiregular `n` and exactly three blocks, the group has a normal
/// subgroup that is regular, or of index 3 or 6 with three equal-length
/// orbits and Frobenius action on each.
fn check_three_block_structure(
    a: &ActionInstance,
    _n: &Subgroup,
    k: u32,
    semiregular: bool,
    block_count: u32,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "three-block-structure";
    if k != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 3"));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    if block_count != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "block count is not 3"));
    }
    let regular = find_regular_normal(a)?;
    let frobenius_witness = find_index_frobenius_normal(a, &[3, 6], 3)?;
    let holds = regular.is_some() || frobenius_witness.is_some();
    let evidence = json!({
        "regular_normal_order": regular.as_ref().map(|w| w.order() as u64),
        "frobenius_normal_index": frobenius_witness.as_ref().map(|w| w.index() as u64),
    });
    Ok(if holds {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

/// If the faithful block image of a soluble fixity-3 action acts with fixity
/// exactly 2 on at least three blocks, the group has a regular normal
/// subgroup.
fn check_fixity_two_quotient_regular(
    a: &ActionInstance,
    _n: &Subgroup,
    k: u32,
    semiregular: bool,
    block_count: u32,
    q: &crate::quotient::QuotientAction,
) -> Result<LemmaCheckResult, ClassifyError> {
    const LEMMA: &str = "fixity-two-quotient-regular";
    if k != 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fixity is not 3"));
    }
    if !a.group().is_soluble() {
        return Ok(LemmaCheckResult::skipped(LEMMA, "group is not soluble"));
    }
    if !semiregular {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "minimal normal subgroup is not semiregular",
        ));
    }
    if block_count < 3 {
        return Ok(LemmaCheckResult::skipped(LEMMA, "fewer than three blocks"));
    }
    let image_fixity = fixity_profile(&ActionInstance::natural(q.image().clone()))?.fixity;
    if image_fixity != 2 {
        return Ok(LemmaCheckResult::skipped(
            LEMMA,
            "block image fixity is not 2",
        ));
    }
    let witness = find_regular_normal(a)?;
    let evidence = json!({
        "image_fixity": image_fixity,
        "kernel_exceeds_n": q.kernel_exceeds_n(),
        "regular_normal_order": witness.as_ref().map(|w| w.order() as u64),
    });
    Ok(if witness.is_some() {
        LemmaCheckResult::holds(LEMMA, evidence)
    } else {
        LemmaCheckResult::fails(LEMMA, evidence)
    })
}

fn image_has_regular_normal(
    q: &crate::quotient::QuotientAction,
) -> Result<bool, GroupError> {
    let image = q.image();
    let action = ActionInstance::natural(image.clone());
    for m in image.normal_subgroups()? {
        let sub_action = ActionInstance::new(m.group().clone(), action.domain().to_vec())
            .expect("full domain");
        if is_regular(&sub_action) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn find_regular_normal(a: &ActionInstance) -> Result<Option<Subgroup>, GroupError> {
    for m in a.group().normal_subgroups()? {
        let sub_action = ActionInstance::new(m.group().clone(), a.domain().to_vec())
            .expect("invariant domain");
        if is_regular(&sub_action) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn find_index_frobenius_normal(
    a: &ActionInstance,
    indices: &[u128],
    orbit_count: usize,
) -> Result<Option<Subgroup>, GroupError> {
    for f in a.group().normal_subgroups()? {
        if !indices.contains(&f.index()) {
            continue;
        }
        let f_action = ActionInstance::new(f.group().clone(), a.domain().to_vec())
            .expect("invariant domain");
        let orbits = f_action.orbits();
        if orbits.len() != orbit_count || orbits.windows(2).any(|w| w[0].len() != w[1].len()) {
            continue;
        }
        let all_frobenius = orbits.iter().all(|orbit| {
            let on_orbit = ActionInstance::new(f.group().clone(), orbit.clone())
                .expect("orbit invariant");
            is_frobenius_action(&on_orbit)
        });
        if all_frobenius {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Applies the fixity-2 classifier to construct evidence for the composite
/// checks; exported for harness reuse.
pub fn classify_quotient_fixity2(
    q: &crate::quotient::QuotientAction,
) -> Result<crate::classify::ClassificationReport, ClassifyError> {
    classify_fixity2(&ActionInstance::natural(q.image().clone()))
}
