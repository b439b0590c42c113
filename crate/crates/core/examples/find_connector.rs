//! Builds and checks an antichain connector: the strip on `w_0..w_{len-1}`
//! with `w_i ~ w_j` iff `|i - j|` is 1, 3 or 4, plus extra chords.
//!
//! For this distance set a placed window forces every later vertex, so
//! homomorphism search stays shallow; the chord `0-2` breaks the reflection.
//! Prints the graph JSON when the chain is rigid and every `G_t -> G_t'`
//! search for `n = 2` agrees with `t <= t'`.
//!
//! `cargo run --release --example find_connector -- 55 13 0-2`

use std::time::Instant;

use tenslab::constructions::{antichain_family, check_connector, connector_chain, Designated};
use tenslab::search::{count_homs, hom_exists, HomOptions};
use tenslab::Graph;

/// Vertices `w_0..w_{len-1}`, `w_i ~ w_j` iff `|i - j|` is in `steps`, plus
/// extra chords.
fn strip(len: usize, steps: &[usize], chords: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    for i in 0..len {
        for &s in steps {
            if i + s < len {
                edges.push((i, i + s));
            }
        }
    }
    edges.extend_from_slice(chords);
    (len, edges)
}

fn distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![usize::MAX / 4; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for &(a, b) in edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let len: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(53);
    let gap: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(13);
    let chords: Vec<(usize, usize)> = args[3.min(args.len())..]
        .iter()
        .map(|c| {
            let (a, b) = c.split_once('-').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    let (n, edges) = strip(len, &[1, 3, 4], &chords);
    let d = distances(n, &edges);
    let xs: Vec<usize> = (0..5).map(|j| 1 + j * gap).collect();
    let (a, b) = (0, n - 1);
    eprintln!("x distances: {:?}", xs.windows(2).map(|w| d[w[0]][w[1]]).collect::<Vec<_>>());
    let h = Graph::from_index_edges("H", false, n, &edges);
    let mut des = Designated::new();
    des.insert("a".into(), a.to_string());
    des.insert("b".into(), b.to_string());
    for (j, x) in xs.iter().enumerate() {
        des.insert(format!("x{}", j + 1), x.to_string());
    }
    let (_, _, check) = check_connector(&h, &des).unwrap();
    eprintln!("check: {check:?}");
    let start = Instant::now();
    let autos = count_homs(&h, &h, &HomOptions::default());
    eprintln!("endomorphisms of H: {autos:?} in {:?}", start.elapsed());
    for k in 1..=2 {
        let chain = connector_chain(k, &h, &des).unwrap();
        let start = Instant::now();
        let endos = count_homs(&chain, &chain, &HomOptions::default());
        eprintln!("chain {k} endomorphisms: {endos:?} in {:?}", start.elapsed());
    }
    let start = Instant::now();
    let mut ok = true;
    for t in 0..4u8 {
        for t2 in 0..4u8 {
            let bits = |x: u8| vec![x & 1 == 1, x & 2 == 2];
            let g1 = antichain_family(&bits(t), &h, &des).unwrap();
            let g2 = antichain_family(&bits(t2), &h, &des).unwrap();
            let s2 = Instant::now();
            let r = hom_exists(&g1, &g2, &HomOptions::default());
            let expect = t & !t2 == 0;
            eprintln!("  t={t} t'={t2} -> {} (expect {expect}) {:?}", r.verdict(), s2.elapsed());
            if r.is_unknown() || r.is_yes() != expect {
                ok = false;
            }
        }
    }
    eprintln!("pairs in {:?}, ok={ok}", start.elapsed());
    if ok {
        println!("{{\"name\":\"connector\",\"directed\":false,\"vertices\":[{}],\"edges\":[{}],\"designated\":{}}}",
            (0..n).map(|v| format!("\"{v}\"")).collect::<Vec<_>>().join(","),
            edges.iter().enumerate().map(|(i, (t, h))| format!("{{\"id\":\"e{i}\",\"tail\":\"{t}\",\"head\":\"{h}\"}}")).collect::<Vec<_>>().join(","),
            serde_json::to_string(&des).unwrap());
    }
}
