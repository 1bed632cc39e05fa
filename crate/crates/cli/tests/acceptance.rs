//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured numbers (visible with `--nocapture`).
//!
//! The wall-clock and memory checks (01, 07, 08) take a shared lock so they
//! never contend with each other when tests run on multiple threads.

use std::path::Path;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use saca_core::cell::Symbol;
use saca_core::corpus::{fibonacci_word, periodic_text, random_text};
use saca_core::lyndon::{compute_pss, derive_nss, MarkedPss};
use saca_core::oracles::{brute_force_sa, canonical_lyndon_grouping, oracle_pss_nss};
use saca_core::phase1::{initial_grouping, run_phase1, LyndonGrouping};
use saca_core::phase2::{run_phase2_bfs, run_phase2_reference};
use saca_core::{
    suffix_array, suffix_array_with_stats, BuildConfig, IndexWidth, SentinelPolicy, Symbols, Text,
};

static EXCLUSIVE: Mutex<()> = Mutex::new(());

const SAMPLE: &[u8] = b"acedcebceece";
const SAMPLE_SA: [usize; 13] = [12, 0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8];

fn pass(criterion: u32, what: &str, detail: &str) {
    println!("acceptance {criterion:02} {what}: PASS ({detail})");
}

fn strict(raw: &[u8]) -> Text {
    Text::new(raw, SentinelPolicy::Strict).unwrap()
}

fn phase1_output(text: &Text) -> (LyndonGrouping<u32>, MarkedPss<u32>) {
    fn go<S: Symbol>(syms: &[S]) -> (LyndonGrouping<u32>, MarkedPss<u32>) {
        let pss = MarkedPss::build(syms);
        (run_phase1(initial_grouping(syms), &pss), pss)
    }
    match text.symbols() {
        Symbols::Bytes(s) => go(s.as_slice()),
        Symbols::Wide(s) => go(s.as_slice()),
    }
}

#[test]
fn criterion_01_sample_end_to_end() {
    let _lock = EXCLUSIVE.lock().unwrap_or_else(|e| e.into_inner());
    let text = strict(SAMPLE);
    assert_eq!(suffix_array(&text).to_vec(), SAMPLE_SA);
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let sa = suffix_array(&text);
        best = best.min(start.elapsed());
        assert_eq!(sa.to_vec(), SAMPLE_SA);
    }
    assert!(best < Duration::from_millis(1), "took {best:?}");
    pass(1, "sample text end to end", &format!("best of 5: {best:?}"));
}

#[test]
fn criterion_02_structure_rows() {
    let text = strict(SAMPLE);
    let pss = compute_pss(&text);
    assert_eq!(pss, vec![-1, 0, 1, 1, 0, 4, 0, 6, 7, 7, 6, 10, -1]);
    assert_eq!(
        derive_nss(&pss),
        vec![12, 4, 3, 4, 6, 6, 12, 10, 9, 10, 12, 12, 13]
    );
    pass(2, "pss and nss rows", "both rows exact");
}

#[test]
fn criterion_03_lyndon_grouping() {
    let (grouping, _) = phase1_output(&strict(SAMPLE));
    assert_eq!(grouping.starts_vec(), vec![0, 1, 2, 3, 5, 6, 7, 8]);
    let members = grouping.members();
    assert_eq!(
        members,
        vec![
            vec![12],
            vec![0],
            vec![6],
            vec![4, 10],
            vec![1],
            vec![7],
            vec![3],
            vec![2, 5, 8, 9, 11],
        ]
    );
    // the split of the old first-symbol-c group: {4, 10} below, {1} above
    assert_eq!(members[3], vec![4, 10]);
    assert_eq!(members[4], vec![1]);
    pass(3, "refined grouping", "8 groups, split order verified");
}

#[test]
fn criterion_04_exhaustive_small_alphabet() {
    let start = Instant::now();
    let mut texts = 0u64;
    let mut raw = Vec::with_capacity(11);
    for len in 0..=11usize {
        let mut digits = vec![0u8; len];
        loop {
            raw.clear();
            raw.extend(digits.iter().map(|&d| d + 1));
            let text = strict(&raw);

            let sa = suffix_array(&text);
            assert_eq!(sa.to_vec(), brute_force_sa(&text), "sa mismatch on {raw:?}");

            let pss = compute_pss(&text);
            let (pss_oracle, nss_oracle) = oracle_pss_nss(&text);
            assert_eq!(pss, pss_oracle, "pss mismatch on {raw:?}");
            assert_eq!(derive_nss(&pss), nss_oracle, "nss mismatch on {raw:?}");

            let (grouping, _) = phase1_output(&text);
            let canonical = canonical_lyndon_grouping(&text);
            assert_eq!(grouping.starts_vec(), canonical.starts(), "grouping starts on {raw:?}");
            let members: Vec<Vec<usize>> =
                canonical.groups.iter().map(|g| g.members.clone()).collect();
            assert_eq!(grouping.members(), members, "grouping members on {raw:?}");

            texts += 1;
            // next string over the 3-symbol alphabet
            let mut k = 0;
            while k < len {
                digits[k] += 1;
                if digits[k] < 3 {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == len {
                break;
            }
        }
    }
    assert_eq!(texts, 265_720); // sum of 3^len for len 0..=11
    let took = start.elapsed();
    assert!(took < Duration::from_secs(300), "took {took:?}");
    pass(4, "exhaustive oracle equivalence", &format!("{texts} texts in {took:?}"));
}

#[test]
fn criterion_05_randomized_equivalence() {
    let start = Instant::now();
    let sigmas = [1u16, 2, 4, 26, 255];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ACA_0005);
    for case in 0..1000usize {
        let sigma = sigmas[case % sigmas.len()];
        let len = (rng.next_u32() % 10_001) as usize;
        let policy = if case % 2 == 0 {
            SentinelPolicy::Strict
        } else {
            SentinelPolicy::Remap
        };
        let raw: Vec<u8> = match policy {
            // strict inputs must avoid NUL; remap inputs deliberately
            // include the whole byte range
            SentinelPolicy::Strict => (0..len)
                .map(|_| 1 + (rng.next_u32() % sigma.min(255) as u32) as u8)
                .collect(),
            SentinelPolicy::Remap => (0..len)
                .map(|_| (rng.next_u32() % sigma as u32) as u8)
                .collect(),
        };
        let text = Text::new(&raw, policy).unwrap();
        let sa = suffix_array(&text);
        assert_eq!(
            sa.to_vec(),
            brute_force_sa(&text),
            "case {case} sigma {sigma} len {len} policy {policy:?}"
        );
    }
    let took = start.elapsed();
    assert!(took < Duration::from_secs(300), "took {took:?}");
    pass(5, "randomized oracle equivalence", &format!("1000 texts in {took:?}"));
}

#[test]
fn criterion_06_queue_capacity_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ACA_0006);
    let mut cases: Vec<Vec<u8>> = vec![SAMPLE.to_vec()];
    for _ in 0..200 {
        let len = (rng.next_u32() % 2000) as usize;
        let sigma = 1 + (rng.next_u32() % 26) as u8;
        cases.push((0..len).map(|_| 1 + (rng.next_u32() % sigma as u32) as u8).collect());
    }
    for raw in &cases {
        let text = strict(raw);
        let (grouping, pss) = phase1_output(&text);
        let reference = run_phase2_reference(grouping.clone(), &pss);
        for w in [1usize, 2, 3, 64, 1024] {
            let bfs = run_phase2_bfs(grouping.clone(), &pss, w);
            assert_eq!(bfs, reference, "capacity {w} diverged on len {}", raw.len());
        }
    }
    pass(6, "queue capacity independence", "201 texts x capacities {1,2,3,64,1024}");
}

#[test]
fn criterion_07_near_linear_scaling() {
    let _lock = EXCLUSIVE.lock().unwrap_or_else(|e| e.into_inner());
    let sizes = [1usize << 22, 1 << 23, 1 << 24];
    let mut report = Vec::new();
    for family in ["fibonacci", "random"] {
        let texts: Vec<Text> = sizes
            .iter()
            .map(|&size| {
                let raw = match family {
                    "fibonacci" => fibonacci_word(size),
                    _ => random_text(size, 26, 0x5ACA_0007),
                };
                strict(&raw)
            })
            .collect();
        // one warmup round, then five measured rounds; interleaving the
        // sizes keeps machine-load swings out of the per-doubling ratios
        let mut runs = vec![Vec::with_capacity(5); sizes.len()];
        for round in 0..6 {
            for (slot, text) in texts.iter().enumerate() {
                let start = Instant::now();
                let sa = suffix_array(text);
                let took = start.elapsed();
                assert_eq!(sa.len(), text.len());
                if round > 0 {
                    runs[slot].push(took);
                }
            }
        }
        let medians: Vec<Duration> = runs
            .into_iter()
            .map(|mut r| {
                r.sort();
                r[2]
            })
            .collect();
        for pair in medians.windows(2) {
            let ratio = pair[1].as_secs_f64() / pair[0].as_secs_f64();
            assert!(
                ratio <= 2.6,
                "{family}: doubling ratio {ratio:.3} exceeds 2.6 ({medians:?})"
            );
            report.push(format!("{family} x{ratio:.2}"));
        }
    }
    pass(7, "near-linear scaling", &report.join(", "));
}

/// 50 MiB of mixed content: plain random, Fibonacci, periodic, and
/// small-alphabet random segments.
fn mixed_corpus() -> Vec<u8> {
    const MIB: usize = 1 << 20;
    let mut raw = Vec::with_capacity(50 * MIB);
    raw.extend(random_text(20 * MIB, 64, 0x5ACA_0008));
    raw.extend(fibonacci_word(10 * MIB));
    raw.extend(periodic_text(10 * MIB, 16, 0x5ACA_0009, 256));
    raw.extend(random_text(10 * MIB, 4, 0x5ACA_000A));
    raw
}

#[test]
fn criterion_08_memory_envelope() {
    let _lock = EXCLUSIVE.lock().unwrap_or_else(|e| e.into_inner());
    let raw = mixed_corpus();
    let text = strict(&raw);
    let n = text.len();
    let (sa, stats) = suffix_array_with_stats(&text, &BuildConfig::default()).unwrap();
    assert_eq!(stats.width, IndexWidth::W32);
    assert_eq!(sa.len(), n);
    let per_char = stats.peak_aux_bytes as f64 / n as f64;
    assert!(per_char <= 9.5, "peak aux {per_char:.3} bytes/char");
    pass(
        8,
        "working memory envelope",
        &format!("{per_char:.3} aux bytes/char over {n} symbols"),
    );
}

#[test]
fn criterion_09_width_path_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ACA_0009);
    for case in 0..100usize {
        let len = (rng.next_u32() % 10_001) as usize;
        let sigma = [2u32, 4, 26, 255][case % 4];
        let raw: Vec<u8> = (0..len).map(|_| 1 + (rng.next_u32() % sigma) as u8).collect();
        let text = strict(&raw);
        let narrow = suffix_array_with_stats(
            &text,
            &BuildConfig {
                forced_width: Some(IndexWidth::W32),
                ..Default::default()
            },
        )
        .unwrap()
        .0;
        let wide = suffix_array_with_stats(
            &text,
            &BuildConfig {
                forced_width: Some(IndexWidth::W64),
                ..Default::default()
            },
        )
        .unwrap()
        .0;
        assert!(narrow.same_indices(&wide), "case {case} len {len}");
    }
    pass(9, "width path equivalence", "100 texts, 32-bit == 64-bit");
}

fn saca(args: &[&str], dir: &Path) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_saca"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
        .status
        .code()
        .expect("no signal")
}

#[test]
fn criterion_10_cli_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let sizes = ["0", "1", "1000", "1048576"];
    for kind in ["fibonacci", "random", "periodic"] {
        for size in sizes {
            let input = format!("{kind}-{size}.txt");
            let sa = format!("{kind}-{size}.sa");
            assert_eq!(
                saca(&["gen", &input, "--kind", kind, "--size", size, "--seed", "3"], dir),
                0
            );
            assert_eq!(saca(&["build", &input, "-o", &sa], dir), 0);
            assert_eq!(saca(&["verify", &input, &sa], dir), 0, "{kind} size {size}");
        }
    }

    // corrupting any single entry must flip verification to exit 1;
    // sweep every entry of the fibonacci file at size 1000
    let clean = std::fs::read(dir.join("fibonacci-1000.sa")).unwrap();
    assert_eq!(clean.len(), 4000);
    for entry in 0..1000usize {
        let mut bad = clean.clone();
        let neighbor = if entry == 999 { entry - 1 } else { entry + 1 };
        bad.copy_within(4 * neighbor..4 * neighbor + 4, 4 * entry);
        std::fs::write(dir.join("bad.sa"), &bad).unwrap();
        assert_eq!(
            saca(&["verify", "fibonacci-1000.txt", "bad.sa"], dir),
            1,
            "corrupted entry {entry} slipped through"
        );
    }

    // spot-check a large file and the other generators
    for kind in ["fibonacci", "random", "periodic"] {
        let input = format!("{kind}-1048576.txt");
        let sa = format!("{kind}-1048576.sa");
        let mut bad = std::fs::read(dir.join(&sa)).unwrap();
        let mid = bad.len() / 2 / 4 * 4;
        bad.copy_within(mid + 4..mid + 8, mid);
        std::fs::write(dir.join("bad-large.sa"), &bad).unwrap();
        assert_eq!(saca(&["verify", &input, "bad-large.sa"], dir), 1, "{kind}");
    }

    pass(10, "cli round trips", "3 kinds x 4 sizes, 1003 corruptions rejected");
}
