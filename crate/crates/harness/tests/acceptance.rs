//! Acceptance suite: one test per claim the project promises to hold on the
//! default corpus, each printing a pass/fail line with the coverage it
//! achieved.

use std::time::Instant;

use fitting::logic::{
    closure_nilpotency_formula, nilpotent_closure_formula, parse, soluble_closure_formula,
};
use fitting::radicals::{fitting_subgroup, oracle_fitting, oracle_radical, soluble_radical};
use fitting_harness::{
    default_corpus, run_check, CheckId, CheckStatus, Config, CorpusEntry,
};

fn corpus() -> Vec<CorpusEntry> {
    default_corpus()
}

fn config() -> Config {
    Config::default()
}

/// Runs one check over the whole corpus and asserts that nothing fails;
/// returns (passed, skipped) counts.
fn run_everywhere(check: CheckId) -> (usize, usize) {
    let corpus = corpus();
    let config = config();
    let mut passed = 0;
    let mut skipped = 0;
    for entry in &corpus {
        let report = run_check(entry, check, &config);
        match report.status {
            CheckStatus::Pass => passed += 1,
            CheckStatus::Skipped(_) => skipped += 1,
            CheckStatus::Fail => panic!(
                "{check} failed on {}: {}",
                entry.name,
                serde_json::to_string_pretty(&report.details).unwrap()
            ),
        }
    }
    (passed, skipped)
}

#[test]
fn criterion_01_fitting_subgroups_are_defined_by_their_class_formula() {
    let started = Instant::now();
    let (passed, skipped) = run_everywhere(CheckId::Thm1Fitting);
    let elapsed = started.elapsed();
    assert_eq!(skipped, 0, "the fitting definability check must run everywhere");
    assert!(
        elapsed.as_secs() < 300,
        "full corpus took {elapsed:?}, budget is five minutes"
    );
    println!(
        "criterion 01 thm1-fitting: PASS ({passed} groups, 0 discrepancies, {:.1}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_02_soluble_radicals_are_defined_by_their_length_formula() {
    let (passed, skipped) = run_everywhere(CheckId::Thm1Radical);
    assert_eq!(skipped, 0, "the radical definability check must run everywhere");
    println!("criterion 02 thm1-radical: PASS ({passed} groups, 0 discrepancies)");
}

#[test]
fn criterion_03_generator_commutator_subgroups_match_the_definition() {
    let corpus = corpus();
    let config = config();
    let mut passed = 0;
    let mut pairs = 0u64;
    for entry in &corpus {
        let order = entry.group().unwrap().order();
        let report = run_check(entry, CheckId::Lemma1, &config);
        match report.status {
            CheckStatus::Pass => {
                assert!(order <= 48, "{} should have been skipped", entry.name);
                passed += 1;
                pairs += report.details["pairs_checked"].as_u64().unwrap();
            }
            CheckStatus::Skipped(_) => {
                assert!(order > 48, "{} (order {order}) must not be skipped", entry.name)
            }
            CheckStatus::Fail => panic!("lemma1 failed on {}: {}", entry.name, report.details),
        }
    }
    assert!(passed >= 20, "expected most corpus groups under the order bound");
    println!(
        "criterion 03 lemma1: PASS ({passed} groups, {pairs} normal-subgroup pairs, 0 discrepancies)"
    );
}

#[test]
fn criterion_04_series_word_route_matches_the_direct_route() {
    let corpus = corpus();
    let config = config();
    let mut closures = 0u64;
    for entry in &corpus {
        let report = run_check(entry, CheckId::Lemma2, &config);
        match report.status {
            CheckStatus::Pass => closures += report.details["closures_checked"].as_u64().unwrap(),
            other => panic!("lemma2 on {}: {other:?} {}", entry.name, report.details),
        }
    }
    println!(
        "criterion 04 lemma2: PASS ({} groups, {closures} single-generator closures, 0 discrepancies)",
        corpus.len()
    );
}

#[test]
fn criterion_05_tuple_formula_matches_series_class_bounds() {
    let corpus = corpus();
    let config = config();
    let mut exhaustive = 0;
    let mut sampled = 0;
    let mut tuples = 0u64;
    for entry in &corpus {
        let order = entry.group().unwrap().order();
        let report = run_check(entry, CheckId::Lemma3, &config);
        match report.status {
            CheckStatus::Pass => {
                tuples += report.details["tuples_checked"].as_u64().unwrap();
                match report.details["mode"].as_str().unwrap() {
                    "exhaustive" => {
                        assert!(order <= 24, "{} should be sampled", entry.name);
                        exhaustive += 1;
                    }
                    "sampled" => {
                        assert!(order > 24 && order <= 120);
                        sampled += 1;
                    }
                    other => panic!("unexpected mode {other}"),
                }
            }
            CheckStatus::Skipped(_) => assert!(order > 120, "{} must not skip", entry.name),
            CheckStatus::Fail => panic!("lemma3 failed on {}: {}", entry.name, report.details),
        }
    }
    assert!(exhaustive >= 20 && sampled >= 3);
    println!(
        "criterion 05 lemma3: PASS ({exhaustive} exhaustive + {sampled} sampled groups, {tuples} tuples, 0 discrepancies)"
    );
}

#[test]
fn criterion_06_truncated_theory_tracks_the_fitting_class() {
    let (passed, skipped) = run_everywhere(CheckId::Thm2);
    assert_eq!(skipped, 0);
    println!("criterion 06 thm2: PASS ({passed} groups x p in 0..=5, 0 discrepancies)");
}

#[test]
fn criterion_07_closure_class_profiles_are_monotone_and_bounded() {
    let corpus = corpus();
    let config = config();
    let mut passed = 0;
    for entry in &corpus {
        let report = run_check(entry, CheckId::Thm3Profile, &config);
        assert_eq!(
            report.status,
            CheckStatus::Pass,
            "thm3-profile on {}: {}",
            entry.name,
            report.details
        );
        passed += 1;
        if entry.name == "S4" {
            assert_eq!(
                report.details["d_of_m"],
                serde_json::json!([1, 1, 1, 1]),
                "every subset of the four-group generates inside it"
            );
        }
    }
    println!("criterion 07 thm3-profile: PASS ({passed} groups, S4 profile all ones)");
}

#[test]
fn criterion_08_engel_depths_match_closure_characterizations() {
    let (passed, skipped) = run_everywhere(CheckId::Engel);
    assert_eq!(skipped, 0);
    println!("criterion 08 engel: PASS ({passed} groups, 0 discrepancies)");
}

#[test]
fn criterion_09_commutator_identities_hold() {
    let corpus = corpus();
    let config = config();
    let mut triples = 0u64;
    for entry in &corpus {
        let report = run_check(entry, CheckId::Identities, &config);
        assert_eq!(
            report.status,
            CheckStatus::Pass,
            "identities on {}: {}",
            entry.name,
            report.details
        );
        let order = entry.group().unwrap().order();
        let expected_mode = if order <= 24 { "exhaustive" } else { "sampled" };
        assert_eq!(report.details["mode"].as_str().unwrap(), expected_mode);
        triples += report.details["triples_checked"].as_u64().unwrap();
    }
    println!(
        "criterion 09 identities: PASS ({} groups, {triples} triples, 0 failures)",
        corpus.len()
    );
}

#[test]
fn criterion_10_nilpotent_by_simple_product_example() {
    let corpus = corpus();
    let config = config();
    let entry = corpus.iter().find(|e| e.name == "Q8xA5").unwrap();
    let report = run_check(entry, CheckId::ProductExample, &config);
    assert_eq!(report.status, CheckStatus::Pass, "{}", report.details);
    assert_eq!(report.details["fitting_equals_left_factor"], true);
    assert_eq!(report.details["radical_equals_left_factor"], true);
    assert_eq!(report.details["centralizer_equals_left_times_right_centralizer"], true);
    // The centralizer is strictly larger than the embedded left factor.
    let left = report.details["left_order"].as_u64().unwrap();
    let centralizer = report.details["centralizer_order"].as_u64().unwrap();
    assert!(centralizer > left, "centralizer must strictly contain the left factor");
    assert!(report.details["note"].as_str().unwrap().contains("strictly larger"));
    println!(
        "criterion 10 product-example: PASS (fitting = radical = left factor of order {left}, centralizer order {centralizer} flagged)"
    );
}

#[test]
fn criterion_11_elementwise_radicals_agree_with_the_join_oracles() {
    let corpus = corpus();
    let config = config();
    let mut checked = 0;
    for entry in &corpus {
        let group = entry.group().unwrap();
        if group.order() > config.max_order_oracle {
            continue;
        }
        let fitting = fitting_subgroup(group);
        let fitting_oracle = oracle_fitting(group).unwrap();
        assert_eq!(
            fitting.subgroup, fitting_oracle,
            "fitting oracle disagreement on {}",
            entry.name
        );
        let radical = soluble_radical(group);
        let radical_oracle = oracle_radical(group).unwrap();
        assert_eq!(
            radical.subgroup, radical_oracle,
            "radical oracle disagreement on {}",
            entry.name
        );
        checked += 1;
    }
    assert!(checked >= 24, "most corpus groups fall under the oracle bound");
    println!("criterion 11 oracle agreement: PASS ({checked} groups, 0 discrepancies)");
}

#[test]
fn criterion_12_parser_round_trips_a_golden_formula_set() {
    // Built formulas: rendering then parsing must reproduce them.
    let mut built = Vec::new();
    for n in 1..=3 {
        built.push(nilpotent_closure_formula(n).unwrap());
    }
    for n in 1..=2 {
        built.push(soluble_closure_formula(n).unwrap());
    }
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        built.push(closure_nilpotency_formula(n, m).unwrap());
    }
    assert_eq!(
        built[0].to_string(),
        "A x1. A x2. [p0^x1, p0^x2] = 1",
        "the weight-1 membership formula has a pinned rendering"
    );
    for formula in &built {
        let text = formula.to_string();
        let reparsed = parse(&text).unwrap_or_else(|e| panic!("reparsing '{text}': {e}"));
        assert_eq!(&reparsed, formula, "parse(render(f)) must equal f for '{text}'");
        assert_eq!(reparsed.to_string(), text, "render must be a fixpoint for '{text}'");
    }

    // Canonical strings: parsing then rendering must be byte-identical.
    let golden: [&str; 41] = [
        "1 = 1",
        "x1 = 1",
        "p0 = 1",
        "x1*x2 = x2*x1",
        "x1*x2*x3 = 1",
        "x1*(x2*x3) = 1",
        "x1^-1 = x1",
        "x1^-1^-1 = x1",
        "x1^x2 = x1",
        "x1^x2^x3 = 1",
        "x1^(x2^x3) = 1",
        "(x1*x2)^-1 = x2^-1*x1^-1",
        "(x1*x2)^x3 = x1^x3*x2^x3",
        "[x1, x2] = 1",
        "[x1, x2]^-1 = [x2, x1]",
        "[[x1, x2], x3] = 1",
        "[x1, [x2, x3]] = 1",
        "[x1*x2, x3] = [x1, x3]^x2*[x2, x3]",
        "[x1, x2*x3] = [x1, x3]*[x1, x2]^x3",
        "[x1^-1, x2] = [x1, x2^(x1^-1)]^-1",
        "[x1, x2^-1] = [x1^(x2^-1), x2]^-1",
        "[x1, x2]^x3 = [x1^x3, x2^x3]",
        "~(x1 = 1)",
        "~~(x1 = 1)",
        "~(x1 = 1) & x2 = 1",
        "x1 = 1 & x2 = 1",
        "x1 = 1 & x2 = 1 & x3 = 1",
        "x1 = 1 & (x2 = 1 & x3 = 1)",
        "x1 = 1 | x2 = 1",
        "x1 = 1 & x2 = 1 | x3 = 1",
        "(x1 = 1 | x2 = 1) & x3 = 1",
        "x1 = 1 -> x2 = 1",
        "x1 = 1 -> x2 = 1 -> x3 = 1",
        "(x1 = 1 -> x2 = 1) -> x3 = 1",
        "A x1. x1 = 1",
        "E x1. ~(x1 = 1)",
        "A x1. A x2. [x1, x2] = 1",
        "A x1. E x2. x1*x2 = 1",
        "A x1. x1 = 1 -> E x2. x2*x2 = x1",
        "(A x1. x1 = 1) | (E x2. ~(x2 = 1))",
        "A x1. A x2. [p0^x1, p0^x2] = 1",
    ];
    for text in golden {
        let formula = parse(text).unwrap_or_else(|e| panic!("parsing '{text}': {e}"));
        assert_eq!(formula.to_string(), text, "render(parse(s)) must be byte-identical");
        let reparsed = parse(&formula.to_string()).unwrap();
        assert_eq!(reparsed, formula);
    }
    let total = built.len() + golden.len();
    assert_eq!(total, 50);
    println!("criterion 12 parser: PASS ({total} golden formulas, byte-identical round trips)");
}
