use std::process::{Command, Output};

fn helberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helberg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn lines(out: &Output) -> Vec<String> {
    stdout(out).lines().map(str::to_owned).collect()
}

#[test]
fn weights_tables() {
    let out = helberg(&["weights", "--q", "2", "--d", "3", "--count", "12"]);
    assert!(out.status.success());
    assert_eq!(
        lines(&out),
        ["0", "1", "2", "4", "8", "15", "28", "52", "96", "177", "326", "600"]
    );

    let out = helberg(&["weights", "--q", "4", "--d", "2", "--count", "11"]);
    assert_eq!(
        lines(&out),
        ["0", "1", "4", "16", "61", "232", "880", "3337", "12652", "47968", "181861"]
    );

    let out = helberg(&["weights", "--q", "2", "--d", "1", "--count", "3"]);
    assert_eq!(lines(&out), ["0", "1", "2"]);

    assert_ne!(
        helberg(&["weights", "--q", "1", "--d", "3", "--count", "4"])
            .status
            .code(),
        Some(0)
    );
    assert_ne!(
        helberg(&["weights", "--q", "2", "--d", "0", "--count", "4"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn moments_and_membership() {
    assert_eq!(
        stdout(&helberg(&["moment", "0011110001", "--q", "2", "--d", "3"])),
        "381\n"
    );
    assert_eq!(stdout(&helberg(&["moment", "", "--q", "2", "--d", "3"])), "0\n");
    assert_eq!(
        helberg(&["moment", "0012", "--q", "2", "--d", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        helberg(&["moment", "00x1", "--q", "2", "--d", "3"]).status.code(),
        Some(2)
    );

    let member = helberg(&[
        "member",
        "130200103",
        "--n",
        "9",
        "--d",
        "2",
        "--q",
        "4",
        "--r",
        "147376",
    ]);
    assert_eq!((stdout(&member).as_str(), member.status.code()), ("member\n", Some(0)));
    let other = helberg(&[
        "member",
        "130200102",
        "--n",
        "9",
        "--d",
        "2",
        "--q",
        "4",
        "--r",
        "147376",
    ]);
    assert_eq!(
        (stdout(&other).as_str(), other.status.code()),
        ("non-member\n", Some(1))
    );
}

#[test]
fn decodes_examples() {
    let out = helberg(&[
        "decode",
        "00111000101",
        "--n",
        "10",
        "--d",
        "3",
        "--q",
        "2",
        "--r",
        "381",
    ]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("0011110001\n", Some(0)));

    let out = helberg(&[
        "decode",
        "1021210202",
        "--n",
        "10",
        "--d",
        "3",
        "--q",
        "3",
        "--r",
        "434",
    ]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("1021210222\n", Some(0)));

    // Four edits away from every codeword: decoded, but not verified.
    let out = helberg(&[
        "decode",
        "013002103",
        "--n",
        "9",
        "--d",
        "2",
        "--q",
        "4",
        "--r",
        "147376",
    ]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("130200103\n", Some(1)));
}

#[test]
fn decode_trace_follows_the_word() {
    let out = helberg(&[
        "decode",
        "00111000101",
        "--n",
        "10",
        "--d",
        "3",
        "--q",
        "2",
        "--r",
        "381",
        "--trace",
    ]);
    let text = lines(&out);
    assert_eq!(text[0], "0011110001");
    assert_eq!(text[1], "p1 applied=no len_y=11 a=2 b=1");
    assert_eq!(text.last().unwrap(), "final word=0011110001 verified=yes");
    assert_eq!(text.iter().filter(|l| l.starts_with("step2 ")).count(), 2);
}

#[test]
fn decode_rejects_out_of_range_lengths() {
    let out = helberg(&["decode", "0011", "--n", "10", "--d", "3", "--q", "2", "--r", "381"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
}

#[test]
fn deletions_only_decoding() {
    let out = helberg(&[
        "decode-deletions",
        "001",
        "--n-target",
        "4",
        "--moment",
        "12",
        "--q",
        "2",
        "--d",
        "3",
    ]);
    assert_eq!((stdout(&out).as_str(), out.status.code()), ("0011\n", Some(0)));
}

#[test]
fn corrupt_is_deterministic() {
    let args = [
        "corrupt",
        "0011110001",
        "--q",
        "2",
        "--ins",
        "2",
        "--del",
        "1",
        "--seed",
        "7",
    ];
    let first = helberg(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, helberg(&args).stdout);
    let text = lines(&first);
    assert_eq!(text.len(), 2);
    assert_eq!(text[0].len(), 11);
    assert_eq!(text[1].matches("ins(").count(), 2);
    assert_eq!(text[1].matches("del(").count(), 1);
    assert_eq!(
        helberg(&["corrupt", "0011", "--q", "2", "--ins", "2", "--del", "1", "--seed", "7", "--d", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerates_codebooks() {
    let out = helberg(&["enumerate", "--n", "10", "--d", "3", "--q", "2", "--r", "381"]);
    let words = lines(&out);
    assert!(words.contains(&"0011110001".to_owned()));
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(words, sorted);
    for x in &words {
        let member = helberg(&["member", x, "--n", "10", "--d", "3", "--q", "2", "--r", "381"]);
        assert!(member.status.success());
    }
}

#[test]
fn verify_runs() {
    let out = helberg(&["verify", "--n", "10", "--d", "3", "--q", "2", "--r", "381", "--full"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out).last().unwrap(), "result=PASS");

    let args = [
        "verify", "--n", "8", "--d", "2", "--q", "3", "--r", "5", "--seed", "3", "--count", "300",
    ];
    let sampled = helberg(&args);
    assert_eq!(sampled.status.code(), Some(0));
    assert_eq!(sampled.stdout, helberg(&args).stdout);
}

#[test]
fn verify_refuses_oversized_full_runs() {
    let out = helberg(&["verify", "--n", "30", "--d", "3", "--q", "4", "--r", "0", "--full"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(helberg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(helberg(&["decode", "0011"]).status.code(), Some(2));
}
