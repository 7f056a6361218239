use std::process::{Command, Output};

use projdec::bitlin::{BitVector, CosetTable};
use projdec::golden::{worked_examples, O36};
use projdec_cli::{decode_report, CodeId, DecodeReport, SimReport, WdistReport};
use proptest::prelude::*;

fn projdec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projdec"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_reports_parameters() {
    let out = stdout(&projdec(&["gen", "o36"]));
    assert!(out.contains("n = 36\nk = 19\n"));
    assert_eq!(out.lines().filter(|l| l.len() == 44).count(), 19);

    let out = stdout(&projdec(&["gen", "--code", "c4-10"]));
    assert!(out.contains("m = 10\nsize = 2^12\n"));

    let json: serde_json::Value =
        serde_json::from_slice(&projdec(&["gen", "e40", "--mindist", "--json"]).stdout).unwrap();
    assert_eq!(
        (json["n"].as_u64(), json["k"].as_u64(), json["d"].as_u64()),
        (Some(40), Some(22), Some(8))
    );
}

#[test]
fn wdist_matches_the_published_tables() {
    let report: WdistReport =
        serde_json::from_slice(&projdec(&["wdist", "o36", "--json"]).stdout).unwrap();
    assert_eq!(report.distribution, O36.weight_distribution);
    assert_eq!(report.distribution.len(), 23);
    assert!(stdout(&projdec(&["wdist", "e40"])).contains("\n16\t477210\n"));
    assert!(stdout(&projdec(&["wdist", "c4-9"])).contains("\n4\t51\n"));
}

#[test]
fn decode_first_worked_example() {
    let ex = &worked_examples()[0];
    let out = projdec(&[
        "decode",
        "o36",
        &ex.received().to_string(),
        "--json",
        "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: DecodeReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.branch.unwrap().label(), "c.ii");
    assert_eq!(report.decoded.unwrap(), ex.decoded().to_string());
    assert_eq!(report.syndrome, "wwWw");
    assert_eq!(report.p, 2);
    assert_eq!(report.oracle_agrees, Some(true));
    // Coordinates 4(i-1)+r+1: column 6 first row and column 5 row ω.
    assert_eq!(report.error_positions, vec![19, 21]);
}

#[test]
fn trace_marks_corrected_entries() {
    let ex = &worked_examples()[3];
    let out = stdout(&projdec(&[
        "decode",
        "e40",
        &ex.received().to_string(),
        "--trace",
    ]));
    assert!(out.contains("branch d.iii, 3 error(s)"));
    assert_eq!(out.matches('*').count(), 3 + 2);
    assert!(out.ends_with(&format!("{}\n", ex.decoded())));
}

#[test]
fn codewords_decode_to_themselves() {
    let c = stdout(&projdec(&["encode", "o40", "1011001110001111000101"]));
    let c = c.trim();
    let out = projdec(&["decode", "o40", c, "--json"]);
    let report: DecodeReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.decoded.as_deref(), Some(c));
    assert_eq!(report.error_weight, Some(0));
    assert!(report.error_positions.is_empty());
}

#[test]
fn far_words_fail_with_exit_one() {
    let code = O36.code();
    let table = CosetTable::build(&code).unwrap();
    let leader = table
        .leaders_of_weight(4)
        .next()
        .expect("covering radius is at least 4");
    let c = code
        .encode(&BitVector::from_bits(0x5a5a5, 19).unwrap())
        .unwrap();
    let y = c ^ leader;
    let out = projdec(&["decode", "o36", &y.to_string(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: DecodeReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.status, "failure");
    assert!(report.decoded.is_none());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(projdec(&["gen", "o37"]).status.code(), Some(2));
    assert_eq!(projdec(&["decode", "o36", "0101"]).status.code(), Some(2));
    assert_eq!(
        projdec(&["decode", "c4-9", "000000000"]).status.code(),
        Some(2)
    );
    assert_eq!(
        projdec(&["exhaust", "o36", "--max-weight", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projdec(&["decode", "--code", "o36", "o36", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn block_spaced_input_is_accepted() {
    let spaced = "0011 0000 0000 0000 0000 0110 0011 0011 0011";
    let out = projdec(&["decode", "o36", spaced]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), spaced.replace(' ', ""));
}

#[test]
fn exhaust_reports_full_success() {
    let out = projdec(&["exhaust", "o36", "--max-weight", "3", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("decodes 163947\nsuccesses 163947\noracle mismatches 0\n"));
}

#[test]
fn simulation_is_reproducible() {
    let args = [
        "simulate", "e40", "--trials", "3000", "--weight", "4", "--seed", "7", "--json",
    ];
    let a = projdec(&args);
    assert_eq!(a.stdout, projdec(&args).stdout);
    let report: SimReport = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(
        report.successes + report.failures + report.miscorrections,
        3000
    );
    assert!(report.failures + report.miscorrections > 0);

    let report: SimReport = serde_json::from_slice(
        &projdec(&[
            "simulate", "o40", "--trials", "5000", "--seed", "7", "--json",
        ])
        .stdout,
    )
    .unwrap();
    assert_eq!((report.successes, report.planted_weight), (5000, 3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decode_reports_round_trip(bits in any::<u64>(), code in prop::sample::select(vec![CodeId::O36, CodeId::E36, CodeId::O40, CodeId::E40])) {
        let ctx = code.decoder().unwrap();
        let y = BitVector::from_bits(bits & ((1 << ctx.n()) - 1), ctx.n()).unwrap();
        let report = decode_report(&ctx, code, &y, false);
        let json = serde_json::to_string(&report).unwrap();
        prop_assert_eq!(serde_json::from_str::<DecodeReport>(&json).unwrap(), report);
    }

    #[test]
    fn sim_reports_round_trip(trials in 0u64..1 << 40, counts in (0u64..1000, 0u64..1000), seed in any::<u64>(), mean in prop::option::of(0f64..1e9)) {
        let report = SimReport {
            code: CodeId::C4_10,
            trials,
            planted_weight: 4,
            successes: counts.0,
            failures: counts.1,
            miscorrections: 0,
            seed,
            mean_decode_ns: mean,
        };
        let json = serde_json::to_string(&report).unwrap();
        prop_assert_eq!(serde_json::from_str::<SimReport>(&json).unwrap(), report);
    }
}
