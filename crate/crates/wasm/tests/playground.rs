use litgame_wasm::Playground;

const EXAMPLE: &str = "6 10\n0 1\n0 2\n0 4\n1 2\n1 3\n1 4\n2 5\n3 4\n3 5\n4 5";

fn play_hints(p: &mut Playground) -> usize {
    let class = p.orbit_class();
    let mut moves = 0;
    while let Some(v) = p.hint().unwrap() {
        assert!(p.click(v));
        assert_eq!(p.orbit_class(), class);
        moves += 1;
    }
    moves
}

#[test]
fn hint_guided_session_on_example() {
    let mut p = Playground::new(EXAMPLE).unwrap();
    p.set_config("0,1").unwrap();
    assert_eq!(p.orbit_class().as_deref(), Some("Q1"));
    assert_eq!(play_hints(&mut p), 0);
    assert_eq!(p.weight(), 2);

    p.set_config("111111").unwrap();
    let class = p.orbit_class();
    let moves = play_hints(&mut p);
    assert_eq!(p.weight(), p.target_weight().unwrap());
    assert_eq!(p.history().len(), moves);
    while p.undo() {}
    assert_eq!(p.config(), "111111");
    assert_eq!(p.orbit_class(), class);
}

#[test]
fn every_start_reaches_the_minimum() {
    let mut p = Playground::new(EXAMPLE).unwrap();
    for bits in 1u32..64 {
        let config: String = (0..6).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
        p.set_config(&config).unwrap();
        let expected = if p.orbit_class().as_deref() == Some("Q1") { 2 } else { 1 };
        play_hints(&mut p);
        assert_eq!(p.weight(), expected);
    }
}

#[test]
fn clicks_follow_the_lit_only_rule() {
    let mut p = Playground::new(EXAMPLE).unwrap();
    assert!((0..6).all(|v| !p.click(v)));
    p.set_config("0").unwrap();
    assert!(!p.click(3));
    assert_eq!(p.config(), "100000");
    assert!(p.click(0));
    assert_eq!(p.config(), "111010");
    assert!(p.click(0));
    assert_eq!(p.config(), "100000");
    assert!(!p.click(17));
}

#[test]
fn k2_single_hint() {
    let mut p = Playground::generate("complete", "2", None).unwrap();
    p.set_config("11").unwrap();
    assert_eq!(p.hint().unwrap(), Some(0));
    assert!(p.click(0));
    assert_eq!(p.hint().unwrap(), None);
    assert_eq!(p.weight(), 1);
}

#[test]
fn analysis_json() {
    let p = Playground::generate("grid", "2,3", None).unwrap();
    let v: serde_json::Value = serde_json::from_str(&p.analyze()).unwrap();
    assert_eq!(v["report"]["nondegenerate"], true);
    assert_eq!(v["report"]["one_lit"], true);
    let claw = Playground::generate("star", "4", None).unwrap();
    assert_eq!(claw.orbit_class(), None);
    let v: serde_json::Value = serde_json::from_str(&claw.analyze()).unwrap();
    assert_eq!(v["report"]["verdict"], "degenerate_out_of_scope");
}

#[test]
fn layouts_fit_the_box_and_repeat() {
    let grid = Playground::generate("grid", "2,3", None).unwrap();
    let pos = grid.layout(300.0, 200.0);
    assert_eq!(pos.len(), 12);
    // Vertex 1 sits right of vertex 0 in the same row; vertex 3 starts the next row.
    assert!(pos[2] > pos[0] && (pos[3] - pos[1]).abs() < 1e-9);
    assert!((pos[6] - pos[0]).abs() < 1e-9 && pos[7] > pos[1]);

    let p = Playground::new(EXAMPLE).unwrap();
    let a = p.layout(400.0, 400.0);
    assert_eq!(a, p.layout(400.0, 400.0));
    assert!(a.iter().all(|&c| (0.0..=400.0).contains(&c)));
    for u in 0..6 {
        for v in u + 1..6 {
            let d = (a[2 * u] - a[2 * v]).hypot(a[2 * u + 1] - a[2 * v + 1]);
            assert!(d > 10.0, "vertices {u} and {v} overlap");
        }
    }
    assert_eq!(Playground::generate("path", "1", None).unwrap().layout(10.0, 10.0), vec![5.0, 5.0]);
}

#[test]
fn bad_input_is_reported() {
    assert!(Playground::new("3 1\n0 1").is_err());
    assert!(Playground::generate("blob", "3", None).is_err());
    assert!(Playground::generate("grid", "2,x", None).is_err());
    let mut p = Playground::new(EXAMPLE).unwrap();
    assert!(p.set_config("1010").is_err());
    let mut big = Playground::generate("grid", "5,5", None).unwrap();
    big.set_config("0").unwrap();
    assert!(big.hint().is_err());
}

#[test]
fn edges_are_flat_pairs() {
    let p = Playground::generate("path", "3", None).unwrap();
    assert_eq!(p.edges(), vec![0, 1, 1, 2]);
    assert_eq!(p.order(), 3);
}
