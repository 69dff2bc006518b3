use period_core::linalg::smith::smith_normal_form;
use period_strata::corpus::{rand_matrix, rng_from_seed};
use period_core::rings::RingDescriptor;
use std::time::Instant;

fn main() {
    let mut rng = rng_from_seed(0);
    let qx = RingDescriptor::poly_ring("x");
    for n in [2, 3, 4] {
        let a = rand_matrix(&mut rng, &qx, n, n, 4, 3);
        let t = Instant::now();
        let snf = smith_normal_form(&a).unwrap();
        let max_deg = snf.divisors().iter().filter_map(|d| d.degree()).max();
        println!("n={}  {:?}  rank={} maxdeg={:?}", n, t.elapsed(), snf.rank(), max_deg);
    }
}
