use wavekit_core::*;
use std::time::Instant;

fn pair_of(s: &str) -> (String, String) {
    let w = parse_word(s).unwrap();
    let t = Instant::now();
    let pair = distinguished_meridian_pair(&w).unwrap();
    let key = pair.canon_key();
    let out = (key.0.to_string(), key.1.to_string());
    println!("{s} -> {} | {}   [{:?}] moves={}", out.0, out.1, t.elapsed(), pair.moves.len());
    out
}

#[test]
fn debug_fixture_pairs() {
    let cc = |a: &str, b: &str| -> (String, String) {
        let mut k = [parse_word(a).unwrap().canon(), parse_word(b).unwrap().canon()];
        k.sort();
        (k[0].to_string(), k[1].to_string())
    };
    // m011
    assert_eq!(pair_of("AAABAbbbAB"), cc("Abb", "AAAAB"));
    assert_eq!(pair_of("AABBAABaBaB"), cc("ABaB", "AABBB"));
    // v2293
    let got = pair_of("AABABAABaBAABaBBaBAABaB");
    let mut want = [parse_word("BBaBAABaB").unwrap().canon(), parse_word("ABABAABaBAAB").unwrap().canon()];
    want.sort();
    assert_eq!(got, (want[0].to_string(), want[1].to_string()));
    // s768 R1..R4
    let fixtures = [
        ("AAAAABBAABBAAbbbAABBAABB", "aabbaaB", "aabbaabbaaaaa"),
        ("AAABBAAbAABBAAABBAAbAAbAABB", "aabbaaa", "baaBaabbaaabbaaBaa"),
        ("AAAAABBBAABAABBBAAAAABBBAABBB", "bbaaa", "aabbbaabaabbbaaaaabbbaab"),
        ("AABAABaBAABaBBaBAABaBBaBAABaB", "baabAbaaba", "bAbaabAbbAbaabAbb"),
    ];
    for (r, m1, m2) in fixtures {
        let got = pair_of(r);
        let mut want = [parse_word(m1).unwrap().canon(), parse_word(m2).unwrap().canon()];
        want.sort();
        assert_eq!(got, (want[0].to_string(), want[1].to_string()), "relator {r}");
    }
    // Section 13 positive fixtures
    let t = Instant::now();
    let w1 = parse_word("AAAAAAABBAAAABB").unwrap(); // A^7 B^2 A^4 B^2
    let hp = distinguished_meridian_pair(&w1).unwrap();
    println!("A7B2A4B2 horizontal -> {} | {} [{:?}]", hp.m1, hp.m2, t.elapsed());
    let has_a3b = hp.m1.canon() == parse_word("AAAB").unwrap().canon()
        || hp.m2.canon() == parse_word("AAAB").unwrap().canon();
    assert!(has_a3b, "pair contains A^3 B");
    assert!(homology_of_filling(&hp.base, if has_a3b && hp.m1.canon() == parse_word("AAAB").unwrap().canon() { &hp.m1 } else { &hp.m2 }).is_trivial());
    let vp = vertical_slope_pair(&w1).unwrap();
    println!("A7B2A4B2 vertical -> {} | {}", vp.m1, vp.m2);
    let h1 = homology_of_filling(&vp.base, &vp.m1);
    let h2 = homology_of_filling(&vp.base, &vp.m2);
    println!("vertical fillings: {h1} {h2}");
    assert_eq!(h1.order(), Some(22));
    assert_eq!(h2.order(), Some(22));
    // A^7 B A^3 B A^7 B^2
    let w2 = parse_word("AAAAAAABAAABAAAAAAABB").unwrap();
    let vp2 = vertical_slope_pair(&w2).unwrap();
    let g1 = homology_of_filling(&vp2.base, &vp2.m1);
    println!("A7BA3BA7B2 vertical fillings: {g1}");
    assert_eq!(g1.order(), Some(23));
}
