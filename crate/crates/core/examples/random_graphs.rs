//! Random connected graphs with a prescribed edge count, and the edge-list
//! file format.

use onebit_detect::graph::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> onebit_detect::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for (n, m) in [(8, 7), (8, 14), (8, 28)] {
        let g = Graph::random_connected(n, m, &mut rng)?;
        let degrees: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
        println!("n={n} m={} connected={} degrees={degrees:?}", g.edge_count(), g.is_connected());
    }

    let g = Graph::random_connected(6, 8, &mut rng)?;
    let mut buf = Vec::new();
    g.write_edge_list(&mut buf)?;
    print!("{}", String::from_utf8_lossy(&buf));
    let back = Graph::read_edge_list(buf.as_slice())?;
    assert_eq!(back, g);
    println!("edge list round trip ok");
    Ok(())
}
