use wavekit_core::*;
use wavekit_core::word::{CanonFlags, Letter};
use std::collections::BTreeSet;

fn all_reduced(len: usize) -> Vec<CyclicWord> {
    let alphabet = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for p in out {
            for &l in &alphabet {
                if p.last().is_some_and(|t: &Letter| *t == l.inverse()) { continue; }
                let mut q = p.clone(); q.push(l); next.push(q);
            }
        }
        out = next;
    }
    out.into_iter().map(CyclicWord::new).filter(|c| c.is_reduced()).collect()
}

#[test]
fn debug_depth2_search_full() {
    for len in 9..=11 {
        let mut seen = BTreeSet::new();
        let mut hits = 0;
        for w in all_reduced(len) {
            let canon = w.canonical_form(CanonFlags::FULL);
            if !seen.insert(canon.clone()) { continue; }
            if is_primitive_or_proper_power(&w).is_primitive_or_power() { continue; }
            let (min, _) = whitehead_minimize(&w);
            if min.len() != w.len() { continue; }
            let Ok(pair) = distinguished_meridian_pair(&w) else { continue };
            let c1 = is_primitive_or_proper_power(&pair.m1).is_primitive_or_power();
            let c2 = is_primitive_or_proper_power(&pair.m2).is_primitive_or_power();
            if c1 || c2 { continue; }
            // both non-primitive: candidate depth >= 2
            match depth(&w) {
                Ok(d) if d.depth >= 2 => {
                    hits += 1;
                    if hits <= 5 {
                        let path: Vec<String> = d.path.iter().map(|p| p.to_string()).collect();
                        println!("len {len}: depth {} for {} path {}", d.depth, w, path.join(" -> "));
                    }
                }
                Ok(d) => { println!("len {len}: {} pair both nonprim but depth {}", w, d.depth); }
                Err(e) => { println!("len {len}: {} pair both nonprim, depth error {e}", w); }
            }
        }
        println!("len {len}: {hits} depth>=2 canonical words");
        if hits > 0 { return; }
    }
    panic!("no depth-2 word found up to length 11");
}
