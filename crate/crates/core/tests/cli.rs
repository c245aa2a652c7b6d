mod common;

use common::{check_exit, golden, gwgrass, EXIT_MATRIX, GOLDEN};
use gwgrass::json::{CensusJson, DecompositionJson};
use gwgrass::{gw_grassmannian, SpectrumDecomposition};

#[test]
fn golden_files() {
    for (args, file) in GOLDEN {
        let run = gwgrass(args);
        assert_eq!(run.code, 0, "{}", run.stderr);
        assert_eq!(run.stdout, golden(file), "{}", args.join(" "));
    }
}

#[test]
fn json_is_stable_and_parses_back() {
    let args = [
        "decompose",
        "--d",
        "3",
        "--e",
        "4",
        "--shift",
        "-1",
        "--json",
    ];
    let first = gwgrass(&args).stdout;
    assert_eq!(first, gwgrass(&args).stdout);
    let parsed: DecompositionJson = serde_json::from_str(&first).unwrap();
    let back = SpectrumDecomposition::try_from(parsed).unwrap();
    assert_eq!(back, gw_grassmannian(3, 4, -1).unwrap());

    let census = gwgrass(&["classify", "--rank", "2", "--bound", "2", "--json"]).stdout;
    let parsed: CensusJson = serde_json::from_str(&census).unwrap();
    assert!(parsed.antisymmetric.is_empty());
}

#[test]
fn enumerate_examples() {
    let run = gwgrass(&["enumerate", "--d", "2", "--e", "2"]);
    assert_eq!(run.stdout.lines().count(), 6);
    assert_eq!(run.stdout.lines().next(), Some("(2,2)"));
    assert_eq!(run.stdout.lines().last(), Some("()"));

    let run = gwgrass(&[
        "enumerate",
        "--d",
        "4",
        "--e",
        "4",
        "--degree",
        "8",
        "--symmetric-only",
    ]);
    assert_eq!(run.stdout.lines().count(), 6);
    assert!(!run.stdout.contains("(4,2,1,1)"));

    let run = gwgrass(&["enumerate", "--d", "1", "--e", "2", "--degree", "1"]);
    assert_eq!(run.stdout, "(1)\n");

    let run = gwgrass(&[
        "enumerate",
        "--d",
        "2",
        "--e",
        "2",
        "--degree",
        "2",
        "--json",
    ]);
    assert_eq!(run.stdout, "[[2,0],[1,1]]\n");
}

#[test]
fn decompose_examples() {
    let run = gwgrass(&["decompose", "--d", "2", "--e", "2", "--verify"]);
    assert_eq!(run.code, 0);
    assert!(run
        .stdout
        .starts_with("GW^[0](Gr(2,4)) = 2·GW^[0](k) ⊕ 2·K(k)\n"));
    assert!(run
        .stdout
        .contains("verified against brute-force enumeration"));

    let run = gwgrass(&["decompose", "--d", "1", "--e", "2", "--shift", "3"]);
    assert!(run
        .stdout
        .starts_with("GW^[3](Gr(1,3)) = 1·GW^[3](k) ⊕ 1·K(k)\n"));

    let run = gwgrass(&["decompose", "--d", "3", "--e", "2"]);
    assert!(run
        .stdout
        .starts_with("GW^[0](Gr(3,5)) = 2·GW^[0](k) ⊕ 4·K(k)\n"));
}

#[test]
fn classify_examples() {
    let run = gwgrass(&["classify", "--rank", "1", "--bound", "2"]);
    assert!(
        run.stdout.contains("= 1·GW^[0](k) ⊕ 2·K(k)"),
        "{}",
        run.stdout
    );
    let run = gwgrass(&["classify", "--rank", "3", "--bound", "0"]);
    assert!(
        run.stdout.contains("= 1·GW^[0](k) ⊕ 0·K(k)"),
        "{}",
        run.stdout
    );
}

#[test]
fn count_examples() {
    let run = gwgrass(&["count", "--d", "4", "--e", "4"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("half partitions (recursive): 8"));
    assert!(run.stdout.contains("symmetric (closed form):     6"));
    assert!(run.stdout.contains("agreement: yes"));

    let run = gwgrass(&["count", "--d", "1", "--e", "2"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("total is odd"));
}

#[test]
fn exit_code_matrix() {
    for (cmd, args, want) in EXIT_MATRIX {
        check_exit(cmd, args, *want).unwrap();
    }
    assert_eq!(gwgrass(&["--help"]).code, 0);
}

#[test]
fn verification_mismatch_exits_five() {
    use gwgrass::cli::{failure_outcome, verify_decomposition};
    use gwgrass::{Summand, Theory};
    use num_bigint::BigUint;

    let mut g = gw_grassmannian(4, 4, 0).unwrap();
    assert!(verify_decomposition(&g).is_ok());
    g.summands[0] = Summand {
        theory: Theory::Gw { shift: 0 },
        multiplicity: BigUint::from(7u32),
    };
    let out = failure_outcome(verify_decomposition(&g).unwrap_err());
    assert_eq!(out.code, 5);
    assert!(out
        .stderr
        .starts_with("verification failed: expected p=6, q=32"));
}
