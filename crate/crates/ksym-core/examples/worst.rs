use ksym_core::canon::canonical_code;
use ksym_core::inflation::inflate;
use ksym_core::Graph;
use std::time::Instant;

fn time(name: &str, g: &Graph) {
    let t = Instant::now();
    let code = canonical_code(g).unwrap();
    println!("{name}: {:?} (bits {:#x})", t.elapsed(), code.bits());
}

fn main() {
    time("empty16", &Graph::empty(16));
    time("complete16", &Graph::complete(16));
    time("C16", &Graph::cycle(16));
    time("C16 complement", &Graph::cycle(16).complement());
    // 4-dimensional hypercube: vertex-transitive, twin-free, 4-regular
    let mut q4 = Graph::empty(16);
    for a in 0..16usize {
        for b in a + 1..16 {
            if (a ^ b).count_ones() == 1 {
                q4.add_edge(a, b);
            }
        }
    }
    time("Q4", &q4);
    time("K8,8", &inflate(&Graph::complete(2), &Graph::empty(8)).unwrap());
    time("inflate(C4,K4)", &inflate(&Graph::cycle(4), &Graph::complete(4)).unwrap());
    time("2 x C8", &{
        let mut g = Graph::empty(16);
        for i in 0..8 { g.add_edge(i, (i + 1) % 8); g.add_edge(8 + i, 8 + (i + 1) % 8); }
        g
    });
}
