use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mergelab(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mergelab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn mergelab");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/worst_case_500.txt");

#[test]
fn table_golden() {
    let out = mergelab(&["table", "--min", "1", "--max", "6"], None);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,W,B,lower,upper,epsilon,depth\n\
         1,0,0,0.00000000000,0.0860713320559,0.00000000000,0\n\
         2,1,1,1.00000000000,1.17214266411,0.00000000000,1\n\
         3,3,2,2.75488750216,3.01310149833,0.0817041659455,2\n\
         4,5,4,5.00000000000,5.34428532822,0.00000000000,2\n\
         5,8,5,7.60964047444,8.03999713472,0.0780719051126,3\n\
         6,11,7,10.5097750043,11.0262029967,0.0817041659455,3\n"
    );
}

#[test]
fn table_rows() {
    let out = mergelab(&["table", "--min", "500", "--max", "500"], None);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[..3], ["500", "3989", "2216"]);
    assert_eq!(row[6], "9");

    let out = mergelab(&["table", "--min", "1", "--max", "100", "--step", "7"], None);
    let ns: Vec<u64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ns, (1..=100).step_by(7).collect::<Vec<_>>());
    assert!(!stdout(&out).contains(",\n"));

    let again = mergelab(&["table", "--min", "1", "--max", "100", "--step", "7"], None);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn table_usage_errors() {
    for args in [
        &["table", "--min", "5", "--max", "4"][..],
        &["table", "--min", "0", "--max", "4"],
        &["table", "--min", "1", "--max", "4", "--step", "0"],
        &["table", "--min", "x", "--max", "4"],
    ] {
        let out = mergelab(args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn gen_worst() {
    let out = mergelab(&["gen-worst", "1"], None);
    assert_eq!(stdout(&out), "1\ncomps=0,W=0\n");

    let out = mergelab(&["gen-worst", "8"], None);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0].split(',').count(), 8);
    assert_eq!(lines[1], "comps=17,W=17");

    let out = mergelab(&["gen-worst", "500"], None);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let mut values: Vec<u32> = lines[0].split(',').map(|v| v.parse().unwrap()).collect();
    values.sort_unstable();
    assert_eq!(values, (1..=500).collect::<Vec<_>>());
    assert_eq!(lines[1], "comps=3989,W=3989");

    assert_eq!(mergelab(&["gen-worst", "0"], None).status.code(), Some(2));
}

#[test]
fn generated_worst_case_round_trips_through_count() {
    let out = mergelab(&["gen-worst", "300"], None);
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    let counted = mergelab(&["count"], Some(first));
    let w = mergelab_core::analytics::w_closed(300);
    let b = mergelab_core::analytics::best_case(300);
    assert_eq!(stdout(&counted), format!("n=300,comps={w},W={w},B={b}\n"));
}

#[test]
fn tree_dump() {
    let out = mergelab(&["tree", "1"], None);
    assert_eq!(stdout(&out), "0,1,leaf\nleaves_h1=0,internals_h1=0,leaves_h=1\n");

    let out = mergelab(&["tree", "3"], None);
    assert_eq!(
        stdout(&out),
        "0,3,internal\n1,1,leaf\n1,2,internal\n2,1,leaf\n2,1,leaf\nleaves_h1=1,internals_h1=1,leaves_h=2\n"
    );

    let out = mergelab(&["tree", "500"], None);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1000);
    assert_eq!(lines[999], "leaves_h1=12,internals_h1=244,leaves_h=488");
    assert_eq!(mergelab(&["tree", "0"], None).status.code(), Some(2));
}

#[test]
fn count_from_stdin() {
    let out = mergelab(&["count"], Some("3,1,2\n"));
    let text = stdout(&out);
    assert!(text.starts_with("n=3,comps="));
    let comps: u64 = text.split(',').nth(1).unwrap()["comps=".len()..].parse().unwrap();
    assert!((2..=3).contains(&comps));
    assert!(text.ends_with(",W=3,B=2\n"));

    assert_eq!(stdout(&mergelab(&["count"], Some("1"))), "n=1,comps=0,W=0,B=0\n");
    assert_eq!(
        stdout(&mergelab(&["count", "--alg", "bininsert"], Some("2, 1"))),
        "n=2,comps=1,W=1,B=1\n"
    );
}

#[test]
fn count_reference_array() {
    let floor = mergelab(&["count", FIXTURE], None);
    assert_eq!(stdout(&floor), "n=500,comps=3861,W=3989,B=2216\n");
    let ceil = mergelab(&["count", "--split", "ceil", FIXTURE], None);
    assert_eq!(stdout(&ceil), "n=500,comps=3989,W=3989,B=2216\n");
}

#[test]
fn count_errors() {
    let out = mergelab(&["count"], Some("1,2,banana,4"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"banana\""));
    let out = mergelab(&["count", "/nonexistent/keys.txt"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = mergelab(&["count", "--alg", "quicksort"], Some("1"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runs() {
    let out = mergelab(&["verify", "--max", "64", "--brute", "6"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 9);
    assert!(text.ends_with("9/9 suites passed\n"));

    let out = mergelab(&["verify", "--max", "1", "--brute", "1"], None);
    assert_eq!(out.status.code(), Some(0));

    assert_eq!(mergelab(&["verify", "--max", "4", "--brute", "10"], None).status.code(), Some(2));
    assert_eq!(mergelab(&["verify", "--max", "0"], None).status.code(), Some(2));
}

#[test]
fn verify_desk_scale() {
    let out = mergelab(&["verify", "--max", "4096", "--brute", "8"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
