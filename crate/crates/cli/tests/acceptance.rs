//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;
use std::process::Command;

use perco_dual_core::*;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const LR_PLUS_O: CrossingSpec = CrossingSpec::new(
    Orientation::LeftRight,
    AdjacencyKind::Plus,
    CellState::Occupied,
);
const LR_STAR_O: CrossingSpec = CrossingSpec::new(
    Orientation::LeftRight,
    AdjacencyKind::Star,
    CellState::Occupied,
);
const TD_STAR_V: CrossingSpec =
    CrossingSpec::new(Orientation::TopDown, AdjacencyKind::Star, CellState::Vacant);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_perco-dual"))
}

fn random_cfg(rng: &mut ChaCha8Rng, m: i32, n: i32, p: f64) -> Configuration {
    let mut occupied = Vec::new();
    for row in 0..n {
        for col in 0..m {
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if u < p {
                occupied.push(Cell::new(col, row));
            }
        }
    }
    Configuration::from_occupied(m, n, occupied)
}

fn rotate90(cfg: &Configuration) -> Configuration {
    let (_, n) = (cfg.width(), cfg.height());
    let occupied: Vec<Cell> = cfg
        .occupied_cells()
        .iter()
        .map(|c| Cell::new(n - 1 - c.row, c.col))
        .collect();
    Configuration::from_occupied(n, cfg.width(), occupied)
}

fn windows_with_cells_at_most(cap: i32) -> Vec<(i32, i32)> {
    let mut out = Vec::new();
    for m in 1..=cap {
        for n in 1..=cap {
            if m * n <= cap {
                out.push((m, n));
            }
        }
    }
    out
}

#[test]
fn criterion_1_exhaustive_exclusivity() {
    for m in 1..=4 {
        for n in 1..=4 {
            let violations = exhaustive_exclusivity(m, n).unwrap();
            assert!(
                violations.is_empty(),
                "{m}x{n}: {} violations, first: {:?}",
                violations.len(),
                violations.first()
            );
        }
    }
    println!("acceptance criterion 1 (exhaustive exclusivity on windows up to 4x4): PASS");
}

#[test]
fn criterion_2_detector_oracle_agreement() {
    for (m, n) in windows_with_cells_at_most(12) {
        let r = Rect::new(m, n);
        enumerate_configs(m, n, |index, cfg| {
            for spec in CrossingSpec::all() {
                assert_eq!(
                    find_crossing(cfg, &r, spec).is_some(),
                    naive_crossing_exists(cfg, &r, spec),
                    "{m}x{n} config {index} spec {}",
                    spec.label()
                );
            }
        })
        .unwrap();
    }
    let r = Rect::new(10, 10);
    for (pi, p) in [0.3, 0.5, 0.7].into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + pi as u64);
        for trial in 0..100_000u32 {
            let cfg = random_cfg(&mut rng, 10, 10, p);
            for spec in CrossingSpec::all() {
                assert_eq!(
                    find_crossing(&cfg, &r, spec).is_some(),
                    naive_crossing_exists(&cfg, &r, spec),
                    "p={p} trial {trial} spec {}",
                    spec.label()
                );
            }
        }
    }
    println!("acceptance criterion 2 (detector/oracle agreement, exhaustive <=12 cells and 3x100k random 10x10): PASS");
}

#[test]
fn criterion_3_constructive_witnesses() {
    let r3 = Rect::new(3, 3);
    for index in 0..512u64 {
        let cfg = Configuration::from_bit_index(3, 3, index);
        if find_crossing(&cfg, &r3, LR_STAR_O).is_none() {
            let w = construct_vacant_plus_td(&cfg, &r3)
                .unwrap_or_else(|e| panic!("3x3 config {index}: {e}"));
            assert!(validate_witness(&r3, &w, &cfg), "3x3 config {index}");
        }
        if find_crossing(&cfg, &r3, LR_PLUS_O).is_none() {
            let w = construct_vacant_star_td(&cfg, &r3)
                .unwrap_or_else(|e| panic!("3x3 config {index}: {e}"));
            assert!(validate_witness(&r3, &w, &cfg), "3x3 config {index}");
        }
    }
    let r8 = Rect::new(8, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(300);
    for trial in 0..10_000u32 {
        let p = [0.3, 0.45, 0.55, 0.7][trial as usize % 4];
        let cfg = random_cfg(&mut rng, 8, 8, p);
        if find_crossing(&cfg, &r8, LR_STAR_O).is_none() {
            let w = construct_vacant_plus_td(&cfg, &r8)
                .unwrap_or_else(|e| panic!("8x8 trial {trial}: {e}"));
            assert!(validate_witness(&r8, &w, &cfg), "8x8 trial {trial}");
        }
        if find_crossing(&cfg, &r8, LR_PLUS_O).is_none() {
            let w = construct_vacant_star_td(&cfg, &r8)
                .unwrap_or_else(|e| panic!("8x8 trial {trial}: {e}"));
            assert!(validate_witness(&r8, &w, &cfg), "8x8 trial {trial}");
        }
    }
    println!(
        "acceptance criterion 3 (constructive witnesses, exhaustive 3x3 and 10k random 8x8): PASS"
    );
}

#[test]
fn criterion_4_envelope() {
    // pinned scene: one occupied cell in the window center
    let cfg = parse_configuration(".....\n.....\n..#..\n.....\n.....\n").unwrap();
    let comp = connected_component(
        &cfg,
        Cell::new(2, 2),
        AdjacencyKind::Star,
        CellState::Occupied,
    )
    .unwrap();
    let env = surrounding_vacant_cycle(&cfg, &comp).unwrap();
    assert_eq!(env.ring.len(), 8);
    assert_eq!(env.skeleton.edge_count(), 8);
    assert_eq!(env.outer_boundary.edge_count(), 12);
    let expected_ring: Vec<Cell> = [
        (1, 1),
        (2, 1),
        (3, 1),
        (3, 2),
        (3, 3),
        (2, 3),
        (1, 3),
        (1, 2),
    ]
    .into_iter()
    .map(|(c, r)| Cell::new(c, r))
    .collect();
    assert_eq!(env.ring.cells(), &expected_ring[..]);
    assert!(env.report.all_passed());

    // 200 random components in 16x16 windows, conditioned on the margin
    let mut rng = ChaCha8Rng::seed_from_u64(400);
    let mut accepted = 0;
    while accepted < 200 {
        let cfg = random_cfg(&mut rng, 16, 16, 0.35);
        let mut seen = CellSet::new();
        let mut picked = None;
        for seed in cfg.occupied_cells().iter() {
            if seen.contains(seed) {
                continue;
            }
            let comp =
                connected_component(&cfg, *seed, AdjacencyKind::Star, CellState::Occupied).unwrap();
            for c in comp.iter() {
                seen.insert(*c);
            }
            let (c0, r0, c1, r1) = comp.bbox().unwrap();
            if c0 >= 2 && r0 >= 2 && c1 <= 13 && r1 <= 13 {
                picked = Some(comp);
                break;
            }
        }
        let Some(comp) = picked else { continue };
        let env = surrounding_vacant_cycle(&cfg, &comp).unwrap();
        assert!(
            env.report.all_passed(),
            "failures: {:?}",
            env.report.failures().collect::<Vec<_>>()
        );
        accepted += 1;
    }

    // every component within a 4x4 bounding box: brute-force dominance
    let mut components = 0u32;
    for index in 1..65_536u64 {
        let small = Configuration::from_bit_index(4, 4, index);
        let occupied = small.occupied_cells();
        let seed = *occupied.iter().next().unwrap();
        let comp_small =
            connected_component(&small, seed, AdjacencyKind::Star, CellState::Occupied).unwrap();
        if comp_small.len() != occupied.len() {
            continue;
        }
        let comp: CellSet = comp_small.iter().map(|c| c.translated(2, 2)).collect();
        let cfg = Configuration::from_occupied(8, 8, comp.iter().copied().collect::<Vec<_>>());
        let env = surrounding_vacant_cycle(&cfg, &comp).unwrap();
        assert!(env.report.all_passed(), "config {index}");
        let skeleton = env.skeleton.cycle();
        let skeleton_edges = skeleton.edge_set();
        let mut found_self = false;
        for cand in enumerate_surrounding_scycles(&cfg, &comp) {
            let sk = skeleton_of_scycle(&cand).unwrap();
            found_self |= sk.cycle() == skeleton;
            for e in sk.cycle().edges() {
                assert!(
                    skeleton_edges.contains(&e) || edge_in_interior(skeleton, &e),
                    "config {index}: edge {}-{} of a competing cycle escapes",
                    e.a(),
                    e.b()
                );
            }
        }
        assert!(
            found_self,
            "config {index}: search missed the computed ring"
        );
        components += 1;
    }
    assert!(
        components > 20_000,
        "only {components} components enumerated"
    );
    println!("acceptance criterion 4 (envelope golden, 200 random 16x16, dominance over {components} components in 4x4 boxes): PASS");
}

#[test]
fn criterion_5_counting_fixtures() {
    assert_eq!(crossing_count(2, 2, LR_PLUS_O).unwrap(), 7);
    assert_eq!(crossing_count(2, 2, TD_STAR_V).unwrap(), 9);
    for (m, n) in windows_with_cells_at_most(16) {
        let total = 1u64 << (m * n);
        for spec in CrossingSpec::all() {
            let a = crossing_count(m, n, spec).unwrap();
            let b = crossing_count(m, n, spec.dual()).unwrap();
            assert_eq!(a + b, total, "{m}x{n} {}", spec.label());
        }
    }
    println!("acceptance criterion 5 (counting fixtures and pair sums up to 16 cells): PASS");
}

#[test]
fn criterion_6_symmetry_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(600);
    for trial in 0..10_000u32 {
        let (m, n) = [(4, 4), (5, 3), (6, 2), (3, 5)][trial as usize % 4];
        let p = [0.3, 0.5, 0.7][trial as usize % 3];
        let cfg = random_cfg(&mut rng, m, n, p);
        let r = Rect::new(m, n);
        let flipped = complement(&cfg);
        let rotated = rotate90(&cfg);
        let rr = Rect::new(n, m);
        for spec in CrossingSpec::all() {
            let here = find_crossing(&cfg, &r, spec).is_some();
            let comp_spec = CrossingSpec::new(spec.orientation, spec.kind, spec.state.flipped());
            assert_eq!(here, find_crossing(&flipped, &r, comp_spec).is_some());
            let rot_spec = CrossingSpec::new(
                match spec.orientation {
                    Orientation::LeftRight => Orientation::TopDown,
                    Orientation::TopDown => Orientation::LeftRight,
                },
                spec.kind,
                spec.state,
            );
            assert_eq!(here, find_crossing(&rotated, &rr, rot_spec).is_some());
        }
    }

    // translation equivariance of envelopes
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let mut accepted = 0;
    while accepted < 100 {
        let cfg = random_cfg(&mut rng, 12, 12, 0.3);
        let mut seen = CellSet::new();
        let mut picked = None;
        for seed in cfg.occupied_cells().iter() {
            if seen.contains(seed) {
                continue;
            }
            let comp =
                connected_component(&cfg, *seed, AdjacencyKind::Star, CellState::Occupied).unwrap();
            for c in comp.iter() {
                seen.insert(*c);
            }
            let (c0, r0, c1, r1) = comp.bbox().unwrap();
            if c0 >= 2 && r0 >= 2 && c1 <= 9 && r1 <= 9 {
                picked = Some(comp);
                break;
            }
        }
        let Some(comp) = picked else { continue };
        let env = surrounding_vacant_cycle(
            &Configuration::from_occupied(12, 12, comp.iter().copied().collect::<Vec<_>>()),
            &comp,
        )
        .unwrap();
        let (dc, dr) = (3, 2);
        let moved: Vec<Cell> = comp.iter().map(|c| c.translated(dc, dr)).collect();
        let moved_cfg = Configuration::from_occupied(17, 16, moved.clone());
        let moved_comp: CellSet = moved.into_iter().collect();
        let moved_env = surrounding_vacant_cycle(&moved_cfg, &moved_comp).unwrap();
        assert_eq!(env.ring.translated(dc, dr), moved_env.ring);
        assert_eq!(
            env.skeleton.translated(dc, dr).cycle(),
            moved_env.skeleton.cycle()
        );
        accepted += 1;
    }
    println!("acceptance criterion 6 (complement/rotation symmetry on 10k windows, translation equivariance on 100 envelopes): PASS");
}

#[test]
fn criterion_7_monte_carlo_identity() {
    let trials = 100_000u64;
    let out = bin()
        .args([
            "mc",
            "--rect",
            "8x8",
            "--p",
            "0.5",
            "--trials",
            "100000",
            "--seed",
            "77",
            "--workers",
            "4",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let identities = v["identities"].as_object().unwrap();
    for (key, value) in identities {
        assert_eq!(value.as_f64().unwrap(), 1.0, "identity {key} must be exact");
    }
    let lr_plus = v["estimates"]["lr_plus_occupied"].as_f64().unwrap();
    let lr_star = v["estimates"]["lr_star_occupied"].as_f64().unwrap();
    let tolerance = 4.0 / (trials as f64).sqrt();
    let sum = lr_plus + lr_star;
    assert!(
        (sum - 1.0).abs() <= tolerance,
        "p(lr_plus_occupied) + p(lr_star_occupied) = {sum}, outside 1 +/- {tolerance}"
    );
    println!("acceptance criterion 7 (Monte Carlo exact identity and p=1/2 self-duality): PASS");
}

#[test]
fn criterion_8_cli_determinism() {
    let dir = std::env::temp_dir().join("perco-dual-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let grid = dir.join("grid.txt");
    std::fs::write(&grid, ".....\n.....\n..#..\n.....\n.....\n").unwrap();
    let grid = grid.to_str().unwrap();

    let run = |args: &[&str]| {
        let out = bin().args(args).output().unwrap();
        (out.status.code(), out.stdout)
    };
    let svg_a = dir.join("a.svg");
    let svg_b = dir.join("b.svg");
    let commands: Vec<Vec<String>> = vec![
        vec!["check".into(), "--grid".into(), grid.into()],
        vec![
            "witness".into(),
            "--grid".into(),
            grid.into(),
            "--td".into(),
            "--star".into(),
            "--vacant".into(),
        ],
        vec![
            "envelope".into(),
            "--grid".into(),
            grid.into(),
            "--seed-cell".into(),
            "2,2".into(),
        ],
        vec!["enumerate".into(), "--rect".into(), "2x3".into()],
        vec![
            "mc".into(),
            "--rect".into(),
            "5x5".into(),
            "--p".into(),
            "0.4".into(),
            "--trials".into(),
            "2000".into(),
            "--seed".into(),
            "5".into(),
        ],
    ];
    for args in &commands {
        let argv: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let (code_a, out_a) = run(&argv);
        let (code_b, out_b) = run(&argv);
        assert_eq!(code_a, code_b, "{args:?}");
        assert_eq!(out_a, out_b, "{args:?} output differs between runs");
    }

    // render: byte-identical files across runs
    for path in [&svg_a, &svg_b] {
        let out = bin()
            .args([
                "render",
                "--grid",
                grid,
                "--out",
                path.to_str().unwrap(),
                "--layers",
                "boundary,skeleton",
                "--seed-cell",
                "2,2",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read(&svg_a).unwrap(),
        std::fs::read(&svg_b).unwrap(),
        "render output differs between runs"
    );

    // mc: identical across worker counts 1 and 4
    let mut outputs = BTreeSet::new();
    for workers in ["1", "4"] {
        let (code, stdout) = run(&[
            "mc",
            "--rect",
            "6x6",
            "--p",
            "0.5",
            "--trials",
            "4000",
            "--seed",
            "11",
            "--workers",
            workers,
        ]);
        assert_eq!(code, Some(0));
        outputs.insert(stdout);
    }
    assert_eq!(outputs.len(), 1, "mc output depends on worker count");
    println!(
        "acceptance criterion 8 (byte-identical CLI output across runs and worker counts): PASS"
    );
}
