//! Complete shifted symmetric functions h*_k at a partition, by the tableau
//! sum, the recurrence and the determinant, and the alternating sum that
//! gives the eigenvalue.

use derangement_spectrum::shifted::{h_star, h_star_rec, s_star, Point};
use derangement_spectrum::spectrum::eta_new;
use derangement_spectrum::Partition;
use num_bigint::BigInt;

fn main() {
    let lam: Partition = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,2,1".into())
        .parse()
        .expect("partition");
    let pt = Point::from(&lam);
    let n = lam.size();
    let mut alt = BigInt::from(0);
    println!(" k  h*_k (sum)   h*_k (rec)   s*_(k) (det)");
    for k in 0..=n {
        let direct = h_star(k, &pt);
        let rec = h_star_rec(k, &pt);
        let det = if k == 0 {
            "1".to_string()
        } else {
            s_star(&Partition::row(k), &pt).unwrap().to_string()
        };
        println!("{k:>2}  {direct:>11}  {rec:>11}  {det:>13}");
        if (n - k).is_multiple_of(2) {
            alt += direct;
        } else {
            alt -= direct;
        }
    }
    println!("alternating sum {alt}, eta({lam}) = {}", eta_new(&lam));
}
