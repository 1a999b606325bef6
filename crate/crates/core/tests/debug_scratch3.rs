use wavekit_core::*;

#[test]
fn debug_recognition_path() {
    for s in ["AAABAAABBB", "AABAABaBaB", "AABaBaBAABB"] {
        let w = parse_word(s).unwrap();
        let pair = distinguished_meridian_pair(&w).unwrap();
        println!("== {s}: pair {} | {}  (lens {} {})", pair.m1, pair.m2, pair.m1.len(), pair.m2.len());
        println!("   pair filling: {}", homology_of_filling(&pair.m1, &pair.m2));
        let g = pair.diagram.graph();
        println!("   pair diagram connected={} cut={}", g.is_connected(), g.has_cut_vertex());
        if g.is_connected() && !g.has_cut_vertex() {
            let w0 = find_waves(&pair.diagram, 0);
            let w1 = find_waves(&pair.diagram, 1);
            println!("   waves based at m1: {}, at m2: {}", w0.len(), w1.len());
        }
        let rec = recognize_closed(&pair.diagram).unwrap();
        println!("   verdict: {}", rec.verdict);
        for (a, b) in &rec.trace {
            println!("   trace: {a} | {b}");
        }
    }
    panic!("debug");
}
