use std::process::{Command, Output};

use cyclic_subwords::CyclicWord;
use serde_json::Value;

fn cycsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycsub"))
        .args(args)
        .env_remove("CYCSUB_CHECKPOINT_DIR")
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = cycsub(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Every string that looks like a word must already be canonical.
fn assert_words_canonical(v: &Value) {
    match v {
        Value::String(s) if !s.is_empty() && s.bytes().all(|b| b == b'0' || b == b'1') => {
            let w: CyclicWord = s.parse().unwrap();
            assert_eq!(&w.to_string(), s, "word {s} is not in canonical form");
        }
        Value::Array(items) => items.iter().for_each(assert_words_canonical),
        Value::Object(map) => map.values().for_each(assert_words_canonical),
        _ => {}
    }
}

#[test]
fn table_csv_matches_known_thresholds() {
    let out = cycsub(&["table", "--n-min", "1", "--n-max", "12", "--jobs", "1"]);
    assert!(out.status.success());
    let mut rdr = csv::Reader::from_reader(&out.stdout[..]);
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        [
            "n",
            "k",
            "necklace_count",
            "witness_u",
            "witness_v",
            "seconds"
        ]
    );
    let ks: Vec<usize> = rdr
        .records()
        .map(|r| r.unwrap()[1].parse().unwrap())
        .collect();
    assert_eq!(ks, [1, 1, 2, 4, 4, 6, 6, 7, 8, 8, 9, 10]);
}

#[test]
fn table_witnesses_are_separated_only_at_k() {
    let rows = json_ok(&["table", "--n-min", "6", "--n-max", "9", "--out", "json"]);
    assert_words_canonical(&rows);
    for row in rows.as_array().unwrap() {
        let k = row["k"].as_u64().unwrap() as usize;
        let u: CyclicWord = row["witness_u"].as_str().unwrap().parse().unwrap();
        let v: CyclicWord = row["witness_v"].as_str().unwrap().parse().unwrap();
        assert_eq!(
            cyclic_subwords::survey::min_distinguishing_length(&u, &v)
                .unwrap()
                .length,
            k
        );
    }
}

#[test]
fn checkpoint_rerun_reproduces_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let args = [
        "table",
        "--n-min",
        "9",
        "--n-max",
        "12",
        "--out",
        "json",
        "--checkpoint",
        path,
    ];
    let strip = |mut v: Value| {
        v.as_array_mut().unwrap().iter_mut().for_each(|r| {
            r.as_object_mut().unwrap().remove("seconds");
        });
        v
    };
    let first = strip(json_ok(&args));
    assert_eq!(strip(json_ok(&args)), first);

    // Partial progress without a finished row resumes from the saved levels.
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let mut saved: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
        saved["row"] = Value::Null;
        std::fs::write(&p, serde_json::to_string(&saved).unwrap()).unwrap();
    }
    assert_eq!(strip(json_ok(&args)), first);
}

#[test]
fn distinguish_stays_within_bound() {
    for mode in ["constructive", "brute"] {
        let r = json_ok(&[
            "distinguish",
            "--u",
            "00110011",
            "--v",
            "00101011",
            "--mode",
            mode,
        ]);
        assert_words_canonical(&r);
        assert!(r["length"].as_u64().unwrap() <= 10);
        assert_eq!(r["in_u"].as_bool().unwrap(), !r["in_v"].as_bool().unwrap());
    }
}

#[test]
fn distinguish_echoes_canonical_words() {
    let r = json_ok(&["distinguish", "--u", "11000", "--v", "10100"]);
    assert_eq!(r["u"], "00011");
    assert_eq!(r["v"], "00101");
    assert_words_canonical(&r);
}

#[test]
fn subwords_exact_and_upto() {
    let r = json_ok(&["subwords", "--w", "0011", "--k", "2"]);
    assert_eq!(r["exact"], serde_json::json!(["00", "01", "11"]));
    assert_eq!(r["count"], 3);

    let out = cycsub(&["subwords", "--w", "0011", "--k", "3", "--upto"]);
    let counts: Vec<u64> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["count"]
                .as_u64()
                .unwrap()
        })
        .collect();
    assert_eq!(counts, [2, 3, 2]);
}

#[test]
fn analyze_reports_block_structure() {
    let r = json_ok(&["analyze", "--w", "100010110001100"]);
    assert_words_canonical(&r);
    for (key, want) in [
        ("n", 15),
        ("n0", 9),
        ("n1", 6),
        ("l", 4),
        ("x", 3),
        ("y", 2),
        ("a", 2),
    ] {
        assert_eq!(r[key], want, "{key}");
    }
    assert_eq!(r["special"], "not-special");
    assert!(r["dist"].is_null());

    let r = json_ok(&["analyze", "--w", "0101011"]);
    assert_eq!(r["special"], "type2");
    assert_eq!(r["dist"], 1);

    let r = json_ok(&[
        "analyze",
        "--w",
        "00100100111",
        "--overlays",
        "--v",
        "00100101011",
    ]);
    let overlays = r["overlays"].as_array().unwrap();
    assert_eq!(overlays.len(), 5);
    assert!(overlays
        .iter()
        .all(|o| o["pairs"].as_array().unwrap().len() == 5));
}

#[test]
fn lower_bound_reports_for_every_residue() {
    let reports = json_ok(&["verify-lower-bound", "--m", "2"]);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert_eq!(r["claimed_min"], r["computed_min"]);
    }
}

#[test]
fn recover_accepts_records_and_plain_lists() {
    let dir = tempfile::tempdir().unwrap();
    let out = cycsub(&["subwords", "--w", "100010110001100", "--k", "15", "--upto"]);
    let lines = dir.path().join("records.jsonl");
    std::fs::write(&lines, &out.stdout).unwrap();
    let want = serde_json::json!({ "n": 15, "n0": 9, "n1": 6, "l": 4 });
    assert_eq!(
        json_ok(&[
            "recover",
            "--n",
            "15",
            "--subwords",
            lines.to_str().unwrap()
        ]),
        want
    );

    let words: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .flat_map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["exact"]
                .as_array()
                .unwrap()
                .clone()
        })
        .collect();
    let flat = dir.path().join("flat.json");
    std::fs::write(&flat, serde_json::to_string(&words).unwrap()).unwrap();
    assert_eq!(
        json_ok(&["recover", "--n", "15", "--subwords", flat.to_str().unwrap()]),
        want
    );
}

#[test]
fn bad_input_exits_with_usage_error() {
    let cases: [&[&str]; 5] = [
        &["distinguish", "--u", "0012", "--v", "0011"],
        &["distinguish", "--u", "0011", "--v", "00111"],
        &["table", "--n-min", "5"],
        &["table", "--n-min", "5", "--n-max", "4"],
        &["subwords", "--w", "0011", "--k", "0"],
    ];
    for args in cases {
        let out = cycsub(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
        assert!(err["error"].is_string() && err["message"].is_string());
    }
}

#[test]
fn inconsistent_subword_set_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.json");
    std::fs::write(&path, r#"["0", "1", "00", "01"]"#).unwrap();
    let out = cycsub(&["recover", "--n", "6", "--subwords", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "inconsistent_set");
}
