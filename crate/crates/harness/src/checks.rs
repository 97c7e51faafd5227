//! Verification checks: one per theorem-shaped claim the library can test on
//! a concrete group, each reporting a machine-readable pass/fail record with
//! re-checkable witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use fitting::group::{centralizer, normal_closure, FiniteGroup, Subgroup};
use fitting::logic::{
    closure_nilpotency_check, definable_set, fitting_class_bound_check,
    nilpotent_closure_formula, soluble_closure_formula,
};
use fitting::radicals::{
    bound_profile, engel_classify, fitting_subgroup, normal_subgroups, oracle_fitting,
    oracle_radical, soluble_radical, RadicalError,
};
use fitting::series::{
    commutator_subgroup, commutator_subgroup_all_pairs, derived_length, derived_series_paths,
    lower_central_series_paths, nilpotency_class, SeriesPaths,
};

use crate::config::{stable_hash, Config};
use crate::corpus::CorpusEntry;
use crate::family::FamilySpec;
use crate::corpus::GroupSource;

/// Largest order for the exhaustive normal-subgroup-pair scan.
const PAIRWISE_COMMUTATOR_MAX_ORDER: usize = 48;
/// Largest order for the sampled tuple-formula scan; bigger groups skip it.
const TUPLE_FORMULA_SAMPLED_MAX_ORDER: usize = 120;
/// Weights and tuple lengths exercised by the tuple-formula check.
const TUPLE_FORMULA_WEIGHTS: std::ops::RangeInclusive<usize> = 1..=3;
const TUPLE_FORMULA_LENGTHS: std::ops::RangeInclusive<usize> = 1..=2;
/// Class-bound levels exercised by the truncated-theory check.
const CLASS_BOUND_MAX_P: usize = 5;
/// Subset sizes probed by the closure-class profile.
const PROFILE_MAX_SUBSET: usize = 4;
/// Engel depth cutoff.
const ENGEL_MAX_DEPTH: usize = 5;
/// Random triples per group for the identity check above the exhaustive cut.
const IDENTITY_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckId {
    Lemma1,
    Lemma2,
    Lemma3,
    Thm1Fitting,
    Thm1Radical,
    Thm2,
    Thm3Profile,
    Engel,
    Identities,
    ProductExample,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::Lemma1,
        CheckId::Lemma2,
        CheckId::Lemma3,
        CheckId::Thm1Fitting,
        CheckId::Thm1Radical,
        CheckId::Thm2,
        CheckId::Thm3Profile,
        CheckId::Engel,
        CheckId::Identities,
        CheckId::ProductExample,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Lemma1 => "lemma1",
            CheckId::Lemma2 => "lemma2",
            CheckId::Lemma3 => "lemma3",
            CheckId::Thm1Fitting => "thm1-fitting",
            CheckId::Thm1Radical => "thm1-radical",
            CheckId::Thm2 => "thm2",
            CheckId::Thm3Profile => "thm3-profile",
            CheckId::Engel => "engel",
            CheckId::Identities => "identities",
            CheckId::ProductExample => "product-example",
        }
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CheckId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown check id '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub group: String,
    pub check: CheckId,
    pub status: CheckStatus,
    pub details: Value,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        let mut value = json!({
            "check": self.check.as_str(),
            "status": self.status.as_str(),
            "details": self.details,
        });
        if let CheckStatus::Skipped(reason) = &self.status {
            value["reason"] = json!(reason);
        }
        value
    }
}

fn elements_json(group: &FiniteGroup, elements: &[usize]) -> Value {
    json!({
        "indices": elements,
        "labels": elements.iter().map(|&e| group.label(e)).collect::<Vec<_>>(),
    })
}

fn pass(details: Value) -> (CheckStatus, Value) {
    (CheckStatus::Pass, details)
}

fn fail(details: Value) -> (CheckStatus, Value) {
    (CheckStatus::Fail, details)
}

fn skip(reason: impl Into<String>, details: Value) -> (CheckStatus, Value) {
    (CheckStatus::Skipped(reason.into()), details)
}

/// Runs one check against one corpus entry.
pub fn run_check(entry: &CorpusEntry, check: CheckId, config: &Config) -> VerificationReport {
    let (status, details) = match entry.group() {
        Err(e) => skip(format!("group construction failed: {e}"), Value::Null),
        Ok(group) => match check {
            CheckId::Lemma1 => check_generator_commutators(group),
            CheckId::Lemma2 => check_series_routes(group),
            CheckId::Lemma3 => check_tuple_formula(group, &entry.name, config),
            CheckId::Thm1Fitting => check_fitting_definability(group, config),
            CheckId::Thm1Radical => check_radical_definability(group, config),
            CheckId::Thm2 => check_class_bound_theory(group),
            CheckId::Thm3Profile => check_closure_class_profile(group, config),
            CheckId::Engel => check_engel_characterizations(group),
            CheckId::Identities => check_commutator_identities(group, &entry.name, config),
            CheckId::ProductExample => check_product_example(entry, group),
        },
    };
    VerificationReport { group: entry.name.clone(), check, status, details }
}

/// lemma1: on every ordered pair of normal subgroups, the commutator
/// subgroup computed from conjugated generators equals the closure of all
/// member-pair commutators.
fn check_generator_commutators(group: &FiniteGroup) -> (CheckStatus, Value) {
    if group.order() > PAIRWISE_COMMUTATOR_MAX_ORDER {
        return skip(
            format!("order {} exceeds the exhaustive bound {PAIRWISE_COMMUTATOR_MAX_ORDER}", group.order()),
            Value::Null,
        );
    }
    let normals = match normal_subgroups(group) {
        Ok(n) => n,
        Err(e) => return skip(format!("normal subgroup enumeration infeasible: {e}"), Value::Null),
    };
    let mut pairs = 0usize;
    for h in &normals {
        for k in &normals {
            pairs += 1;
            let from_generators =
                commutator_subgroup(group, h, k).expect("enumerated subgroups are normal");
            let from_pairs = commutator_subgroup_all_pairs(group, h, k);
            if from_generators != from_pairs {
                return fail(json!({
                    "left_generators": elements_json(group, h.generators()),
                    "right_generators": elements_json(group, k.generators()),
                    "generator_route_order": from_generators.order(),
                    "all_pairs_order": from_pairs.order(),
                }));
            }
        }
    }
    pass(json!({ "normal_subgroups": normals.len(), "pairs_checked": pairs }))
}

fn compare_paths(group: &FiniteGroup, paths: &SeriesPaths<'_>, generator: usize) -> Option<Value> {
    for (index, (direct, word)) in paths.direct.iter().zip(&paths.word).enumerate() {
        if direct != word {
            return Some(json!({
                "generator": elements_json(group, &[generator]),
                "kind": format!("{:?}", paths.kind),
                "term_index": index,
                "direct_order": direct.order(),
                "word_order": word.order(),
            }));
        }
    }
    None
}

/// lemma2: for each single-generator normal closure, the series terms
/// computed from evaluated word values equal the terms from repeated
/// commutator subgroups, for both series.
fn check_series_routes(group: &FiniteGroup) -> (CheckStatus, Value) {
    let mut closures = 0usize;
    let mut max_terms = 0usize;
    for rep in group.class_representatives() {
        let n = normal_closure(group, &[rep]);
        closures += 1;
        let lower = lower_central_series_paths(group, &n).expect("normal closure is normal");
        if let Some(witness) = compare_paths(group, &lower, rep) {
            return fail(witness);
        }
        let derived = derived_series_paths(group, &n).expect("normal closure is normal");
        if let Some(witness) = compare_paths(group, &derived, rep) {
            return fail(witness);
        }
        max_terms = max_terms.max(lower.direct.len()).max(derived.direct.len());
    }
    pass(json!({ "closures_checked": closures, "longest_series": max_terms }))
}

/// lemma3: the lazy tuple-formula decision agrees with the series-computed
/// class bound of the tuple's normal closure — exhaustively on small groups,
/// on seeded samples up to order 120.
fn check_tuple_formula(group: &FiniteGroup, name: &str, config: &Config) -> (CheckStatus, Value) {
    enum Mode {
        Exhaustive,
        Sampled(usize),
    }
    let mode = if group.order() <= config.max_order_exhaustive_tuples {
        Mode::Exhaustive
    } else if group.order() <= TUPLE_FORMULA_SAMPLED_MAX_ORDER {
        let combos = TUPLE_FORMULA_WEIGHTS.count() * TUPLE_FORMULA_LENGTHS.count();
        Mode::Sampled(config.sample_count.div_ceil(combos))
    } else {
        return skip(
            format!("order {} exceeds the sampled bound {TUPLE_FORMULA_SAMPLED_MAX_ORDER}", group.order()),
            Value::Null,
        );
    };

    // The normal closure, hence the expected truth value, depends only on
    // the set of member conjugacy classes; memoize the series route on it.
    let mut class_cache: std::collections::HashMap<Vec<usize>, Option<usize>> =
        std::collections::HashMap::new();
    let mut closure_class = |tuple: &[usize]| -> Option<usize> {
        let mut key: Vec<usize> = tuple.iter().map(|&b| group.class_index(b)).collect();
        key.sort_unstable();
        key.dedup();
        *class_cache.entry(key).or_insert_with(|| {
            nilpotency_class(group, &normal_closure(group, tuple))
                .expect("normal closure is normal")
        })
    };

    let mut tuples_checked = 0u64;
    for n in TUPLE_FORMULA_WEIGHTS {
        for m in TUPLE_FORMULA_LENGTHS {
            let mut verify = |tuple: &[usize]| -> Option<Value> {
                tuples_checked += 1;
                let formula_truth = closure_nilpotency_check(group, n, m, tuple).truth;
                let class = closure_class(tuple);
                let series_truth = class.is_some_and(|c| c <= n);
                (formula_truth != series_truth).then(|| {
                    json!({
                        "weight": n,
                        "tuple": elements_json(group, tuple),
                        "formula_truth": formula_truth,
                        "closure_class": class,
                    })
                })
            };
            match mode {
                Mode::Exhaustive => {
                    let total = group.order().pow(m as u32);
                    for index in 0..total {
                        let mut tuple = Vec::with_capacity(m);
                        let mut rest = index;
                        for _ in 0..m {
                            tuple.push(rest % group.order());
                            rest /= group.order();
                        }
                        if let Some(witness) = verify(&tuple) {
                            return fail(witness);
                        }
                    }
                }
                Mode::Sampled(count) => {
                    let seed = config.seed ^ stable_hash(&format!("{name}/tuple-formula/{n}/{m}"));
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    for _ in 0..count {
                        let tuple: Vec<usize> =
                            (0..m).map(|_| rng.gen_range(0..group.order())).collect();
                        if let Some(witness) = verify(&tuple) {
                            return fail(witness);
                        }
                    }
                }
            }
        }
    }
    let mode_str = match mode {
        Mode::Exhaustive => "exhaustive",
        Mode::Sampled(_) => "sampled",
    };
    pass(json!({ "mode": mode_str, "tuples_checked": tuples_checked }))
}

/// Weight used for the membership formula: the subgroup's own class, clamped
/// to 1 since no weight-0 word exists. For a trivial radical the weight-1
/// formula still defines it: an element with abelian normal closure lies in
/// the Fitting subgroup.
fn clamped_weight(class: Option<usize>) -> usize {
    class.unwrap_or(0).max(1)
}

/// thm1-fitting: the membership formula built from the Fitting subgroup's
/// own nilpotency class defines exactly the Fitting subgroup; the oracle
/// join of all normal nilpotent subgroups agrees where feasible.
fn check_fitting_definability(group: &FiniteGroup, config: &Config) -> (CheckStatus, Value) {
    let fitting = fitting_subgroup(group);
    let class = nilpotency_class(group, &fitting.subgroup).expect("fitting subgroup is normal");
    let weight = clamped_weight(class);
    let formula = nilpotent_closure_formula(weight).expect("weight >= 1");
    let defined = definable_set(group, &formula).expect("closed one-parameter formula");
    if defined != fitting.subgroup.members() {
        return fail(json!({
            "weight": weight,
            "defined": elements_json(group, &defined),
            "fitting": elements_json(group, fitting.subgroup.members()),
        }));
    }
    let oracle = oracle_comparison(group, config, &fitting.subgroup, oracle_fitting);
    let oracle_failed = oracle["status"] == "disagrees";
    let details = json!({
        "fitting_order": fitting.subgroup.order(),
        "class": class,
        "formula_weight": weight,
        "formula": formula.to_string(),
        "oracle": oracle,
    });
    if oracle_failed {
        fail(details)
    } else {
        pass(details)
    }
}

/// thm1-radical: the soluble analogue of [`check_fitting_definability`].
fn check_radical_definability(group: &FiniteGroup, config: &Config) -> (CheckStatus, Value) {
    let radical = soluble_radical(group);
    let length = derived_length(group, &radical.subgroup).expect("radical is normal");
    let depth = clamped_weight(length);
    let formula = soluble_closure_formula(depth).expect("depth >= 1");
    let defined = definable_set(group, &formula).expect("closed one-parameter formula");
    if defined != radical.subgroup.members() {
        return fail(json!({
            "depth": depth,
            "defined": elements_json(group, &defined),
            "radical": elements_json(group, radical.subgroup.members()),
        }));
    }
    let oracle = oracle_comparison(group, config, &radical.subgroup, oracle_radical);
    let oracle_failed = oracle["status"] == "disagrees";
    let details = json!({
        "radical_order": radical.subgroup.order(),
        "derived_length": length,
        "formula_depth": depth,
        "formula": formula.to_string(),
        "oracle": oracle,
    });
    if oracle_failed {
        fail(details)
    } else {
        pass(details)
    }
}

fn oracle_comparison<'g>(
    group: &'g FiniteGroup,
    config: &Config,
    elementwise: &Subgroup<'g>,
    oracle: impl Fn(&'g FiniteGroup) -> Result<Subgroup<'g>, RadicalError>,
) -> Value {
    if group.order() > config.max_order_oracle {
        return json!({
            "status": "skipped",
            "reason": format!("order {} exceeds max_order_oracle {}", group.order(), config.max_order_oracle),
        });
    }
    match oracle(group) {
        Ok(sub) if &sub == elementwise => json!({ "status": "agrees", "order": sub.order() }),
        Ok(sub) => json!({
            "status": "disagrees",
            "oracle_members": elements_json(group, sub.members()),
            "elementwise_members": elements_json(group, elementwise.members()),
        }),
        Err(e) => json!({ "status": "skipped", "reason": e.to_string() }),
    }
}

/// thm2: for each p, the formula-only class-bound check agrees with the
/// series-computed class of the Fitting subgroup.
fn check_class_bound_theory(group: &FiniteGroup) -> (CheckStatus, Value) {
    let fitting = fitting_subgroup(group);
    let class = nilpotency_class(group, &fitting.subgroup)
        .expect("fitting subgroup is normal")
        .expect("fitting subgroup of a finite group is nilpotent");
    let mut levels = Vec::new();
    for p in 0..=CLASS_BOUND_MAX_P {
        let (result, record) = fitting_class_bound_check(group, p, &fitting);
        let expected = class <= p;
        levels.push(json!({
            "p": p,
            "truth": result.truth,
            "n_star": record.n_star,
            "tuple_length": record.m,
            "witness": result.witness.as_ref().map(|w| {
                let tuple: Vec<usize> = w.values().copied().collect();
                elements_json(group, &tuple)
            }),
        }));
        if result.truth != expected {
            return fail(json!({
                "fitting_class": class,
                "levels": levels,
            }));
        }
    }
    pass(json!({ "fitting_class": class, "levels": levels }))
}

/// thm3-profile: closure class bounds over small Fitting-subgroup subsets
/// are nondecreasing in the subset size and never exceed the subgroup's own
/// class.
fn check_closure_class_profile(group: &FiniteGroup, config: &Config) -> (CheckStatus, Value) {
    let fitting = fitting_subgroup(group);
    let class = nilpotency_class(group, &fitting.subgroup)
        .expect("fitting subgroup is normal")
        .expect("fitting subgroup of a finite group is nilpotent");
    let profile = bound_profile(group, &fitting, PROFILE_MAX_SUBSET, config.seed);
    let details = json!({
        "fitting_class": class,
        "m_values": profile.m_values,
        "d_of_m": profile.d_of_m,
        "sampled": profile.sampled,
    });
    let nondecreasing = profile.d_of_m.windows(2).all(|w| w[0] <= w[1]);
    let bounded = profile.d_of_m.iter().all(|&d| d <= class);
    if nondecreasing && bounded {
        pass(details)
    } else {
        fail(details)
    }
}

/// engel: the Engel depth classification matches the normal-closure
/// characterizations — depth ≤ 2 exactly when every single-element closure
/// is abelian, depth ≤ 3 exactly when every such closure has class ≤ 2, and
/// any finite Engel group is its own Fitting subgroup.
fn check_engel_characterizations(group: &FiniteGroup) -> (CheckStatus, Value) {
    let depth = engel_classify(group, ENGEL_MAX_DEPTH);
    let mut all_abelian = true;
    let mut all_class_at_most_2 = true;
    for rep in group.class_representatives() {
        let closure = normal_closure(group, &[rep]);
        let class = nilpotency_class(group, &closure).expect("normal closure is normal");
        if !class.is_some_and(|c| c <= 1) {
            all_abelian = false;
        }
        if !class.is_some_and(|c| c <= 2) {
            all_class_at_most_2 = false;
        }
    }
    let two_engel = depth.is_some_and(|d| d <= 2);
    let three_engel = depth.is_some_and(|d| d <= 3);
    let fitting_is_whole = fitting_subgroup(group).subgroup.is_whole_group();
    let details = json!({
        "engel_depth": depth,
        "all_single_closures_abelian": all_abelian,
        "all_single_closures_class_at_most_2": all_class_at_most_2,
        "fitting_is_whole_group": fitting_is_whole,
    });
    let ok = (two_engel == all_abelian)
        && (three_engel == all_class_at_most_2)
        && (depth.is_none() || fitting_is_whole);
    if ok {
        pass(details)
    } else {
        fail(details)
    }
}

/// identities: the expansion rules for commutators of products, conjugates
/// and inverses hold on every triple (exhaustively on small groups, on
/// seeded random triples above the cut).
fn check_commutator_identities(
    group: &FiniteGroup,
    name: &str,
    config: &Config,
) -> (CheckStatus, Value) {
    let violated = |x: usize, y: usize, z: usize| -> Option<usize> {
        let g = group;
        // [x, y*z] = [x, z] * [x, y]^z
        let lhs = g.commutator(x, g.mul(y, z));
        let rhs = g.mul(g.commutator(x, z), g.conjugate(g.commutator(x, y), z));
        if lhs != rhs {
            return Some(1);
        }
        // [x*y, z] = [x, z]^y * [y, z]
        let lhs = g.commutator(g.mul(x, y), z);
        let rhs = g.mul(g.conjugate(g.commutator(x, z), y), g.commutator(y, z));
        if lhs != rhs {
            return Some(2);
        }
        // [x, y]^z = [x^z, y^z]
        if g.conjugate(g.commutator(x, y), z) != g.commutator(g.conjugate(x, z), g.conjugate(y, z))
        {
            return Some(3);
        }
        // [x^-1, y] = [x, y^(x^-1)]^-1
        let xi = g.inverse(x);
        if g.commutator(xi, y) != g.inverse(g.commutator(x, g.conjugate(y, xi))) {
            return Some(4);
        }
        // [x, y^-1] = [x^(y^-1), y]^-1
        let yi = g.inverse(y);
        if g.commutator(x, yi) != g.inverse(g.commutator(g.conjugate(x, yi), y)) {
            return Some(5);
        }
        None
    };

    let mut triples = 0u64;
    if group.order() <= config.max_order_exhaustive_tuples {
        for x in group.elements() {
            for y in group.elements() {
                for z in group.elements() {
                    triples += 1;
                    if let Some(identity_index) = violated(x, y, z) {
                        return fail(json!({
                            "identity": identity_index,
                            "triple": elements_json(group, &[x, y, z]),
                        }));
                    }
                }
            }
        }
        pass(json!({ "mode": "exhaustive", "triples_checked": triples }))
    } else {
        let seed = config.seed ^ stable_hash(&format!("{name}/identities"));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..IDENTITY_SAMPLES {
            let x = rng.gen_range(0..group.order());
            let y = rng.gen_range(0..group.order());
            let z = rng.gen_range(0..group.order());
            triples += 1;
            if let Some(identity_index) = violated(x, y, z) {
                return fail(json!({
                    "identity": identity_index,
                    "triple": elements_json(group, &[x, y, z]),
                }));
            }
        }
        pass(json!({ "mode": "sampled", "triples_checked": triples }))
    }
}

/// product-example: for a direct product of a nilpotent group by a
/// nonabelian simple group, the Fitting subgroup and soluble radical both
/// equal the embedded nilpotent factor, and the centralizer of a nontrivial
/// element (1, s) of the simple factor is the full product of the left
/// factor with the centralizer of s — a proper supergroup of the left
/// factor, since s centralizes itself.
fn check_product_example(entry: &CorpusEntry, group: &FiniteGroup) -> (CheckStatus, Value) {
    let GroupSource::Family(FamilySpec::Product(left_spec, right_spec)) = &entry.source else {
        return skip("entry is not a direct product of families", Value::Null);
    };
    let (Ok(left), Ok(right)) = (left_spec.build(), right_spec.build()) else {
        return skip("factors could not be rebuilt", Value::Null);
    };
    if right.order() < 2 {
        return skip("right factor is trivial", Value::Null);
    }
    if !fitting_subgroup(&left).subgroup.is_whole_group() {
        return skip("left factor is not nilpotent", Value::Null);
    }
    let right_simple = matches!(normal_subgroups(&right), Ok(normals) if normals.len() == 2)
        && !right.is_abelian();
    if !right_simple {
        return skip("right factor is not nonabelian simple", Value::Null);
    }

    // Element (a, b) of the product has index a * |right| + b.
    let left_embedded: Vec<usize> = (0..left.order()).map(|a| a * right.order()).collect();
    let fitting = fitting_subgroup(group);
    let radical = soluble_radical(group);
    let fitting_ok = fitting.subgroup.members() == left_embedded;
    let radical_ok = radical.subgroup.members() == left_embedded;

    // A nontrivial element of the simple factor: (1, s) with s = 1 in the
    // right factor's numbering.
    let s_embedded = 1usize;
    let c = centralizer(group, s_embedded);
    let right_centralizer = centralizer(&right, 1);
    let right_order = right.order();
    let mut expected: Vec<usize> = (0..left.order())
        .flat_map(|a| right_centralizer.members().iter().map(move |&c| a * right_order + c))
        .collect();
    expected.sort_unstable();
    let centralizer_ok = c.members() == expected;

    let details = json!({
        "left_order": left.order(),
        "right_order": right.order(),
        "fitting_equals_left_factor": fitting_ok,
        "radical_equals_left_factor": radical_ok,
        "centralizer_element": elements_json(group, &[s_embedded]),
        "centralizer_order": c.order(),
        "centralizer_equals_left_times_right_centralizer": centralizer_ok,
        "right_centralizer_order": right_centralizer.order(),
        "note": "the centralizer of (1, s) is the left factor times the centralizer of s in the \
                 right factor, strictly larger than the left factor alone because s centralizes \
                 itself",
    });
    if fitting_ok && radical_ok && centralizer_ok {
        pass(details)
    } else {
        fail(details)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::default_corpus;

    fn entry(name: &str) -> CorpusEntry {
        default_corpus()
            .into_iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("no corpus entry named {name}"))
    }

    #[test]
    fn fitting_definability_check_passes_on_s3() {
        let e = entry("S3");
        let report = run_check(&e, CheckId::Thm1Fitting, &Config::default());
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.details);
        assert_eq!(report.details["fitting_order"], 3);
        assert_eq!(report.details["oracle"]["status"], "agrees");
    }

    #[test]
    fn radical_definability_check_passes_on_a5() {
        let e = entry("A5");
        let report = run_check(&e, CheckId::Thm1Radical, &Config::default());
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.details);
        assert_eq!(report.details["radical_order"], 1);
    }

    #[test]
    fn every_check_is_clean_on_the_trivial_group() {
        let e = entry("Z1");
        for check in CheckId::ALL {
            let report = run_check(&e, check, &Config::default());
            assert_ne!(
                report.status,
                CheckStatus::Fail,
                "{check} failed on the trivial group: {:?}",
                report.details
            );
        }
    }

    #[test]
    fn class_bound_check_discriminates_on_q8() {
        let e = entry("Q8");
        let report = run_check(&e, CheckId::Thm2, &Config::default());
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.details);
        let levels = report.details["levels"].as_array().unwrap();
        assert_eq!(levels[1]["truth"], false, "class 2 exceeds p = 1");
        assert_eq!(levels[2]["truth"], true);
    }

    #[test]
    fn class_bound_level_witnesses_replay_through_the_checker() {
        // A failing level's witness tuple must itself fail the weight-p
        // vanishing condition when handed back to the logic module.
        let e = entry("Q8");
        let report = run_check(&e, CheckId::Thm2, &Config::default());
        let group = e.group().unwrap();
        let levels = report.details["levels"].as_array().unwrap();
        let mut replayed = 0;
        for level in levels {
            if level["truth"] == true {
                assert!(level["witness"].is_null(), "true levels carry no witness");
                continue;
            }
            let p = level["p"].as_u64().unwrap() as usize;
            let tuple: Vec<usize> = level["witness"]["indices"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap() as usize)
                .collect();
            let holds = if p == 0 {
                tuple.iter().all(|&b| b == group.identity())
            } else {
                fitting::logic::closure_nilpotency_check(group, p, tuple.len(), &tuple).truth
            };
            assert!(!holds, "witness for p={p} must re-verify as a failure");
            replayed += 1;
        }
        assert_eq!(replayed, 2, "Q8 fails exactly at p = 0 and p = 1");
    }

    #[test]
    fn product_example_applies_only_to_qualifying_products() {
        let config = Config::default();
        let qualifying = entry("Z2xA5");
        let report = run_check(&qualifying, CheckId::ProductExample, &config);
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.details);

        let wrong_shape = entry("Q8xZ3");
        let report = run_check(&wrong_shape, CheckId::ProductExample, &config);
        assert!(matches!(report.status, CheckStatus::Skipped(_)));

        let not_product = entry("S4");
        let report = run_check(&not_product, CheckId::ProductExample, &config);
        assert!(matches!(report.status, CheckStatus::Skipped(_)));
    }

    #[test]
    fn big_group_skips_bounded_checks() {
        let e = entry("Q8xA5");
        let config = Config::default();
        let report = run_check(&e, CheckId::Lemma1, &config);
        assert!(matches!(report.status, CheckStatus::Skipped(_)));
        let report = run_check(&e, CheckId::Lemma3, &config);
        assert!(matches!(report.status, CheckStatus::Skipped(_)));
        // The oracle leg of thm1 is skipped but the check still runs.
        let report = run_check(&e, CheckId::Thm1Fitting, &config);
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.details);
        assert_eq!(report.details["oracle"]["status"], "skipped");
    }

    #[test]
    fn check_ids_round_trip_through_strings() {
        for id in CheckId::ALL {
            let parsed: CheckId = id.as_str().parse().unwrap();
            assert_eq!(parsed, id);
        }
        assert!("lemma9".parse::<CheckId>().is_err());
    }
}
