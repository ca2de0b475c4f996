//! Generating functions as exact truncated series, compared with enumeration.
//!
//! cargo run --example q_series -- 20

use crankmex::stats::{in_f_j, in_m_j};
use crankmex::verify::{
    count_by_predicate, euler_inverse_series, fj_series_frobenius, jacobi_triple_product_holds,
    mj_series_oracle, partition_numbers_pentagonal,
};

fn main() -> Result<(), crankmex::Error> {
    let order: usize = std::env::args()
        .nth(1)
        .map_or(20, |s| s.parse().expect("order"));
    let p = euler_inverse_series(order)?;
    assert_eq!(p.coeffs, partition_numbers_pentagonal(order)?);
    println!("p(0..={order}) = {:?}", p.coeffs);

    for j in 0..=3 {
        let mj = mj_series_oracle(j, order)?;
        let fj = fj_series_frobenius(j, order)?;
        println!("j={j}: {:?}", mj.coeffs);
        for n in 0..=order {
            let m = count_by_predicate(n as u32, |l| in_m_j(j, l))? as i64;
            let f = count_by_predicate(n as u32, |l| in_f_j(j, l))? as i64;
            assert!(mj.coeff(n) == m && fj.coeff(n) == f && m == f);
        }
    }
    println!(
        "triple product identity to q^{order}: {}",
        jacobi_triple_product_holds(order)?
    );
    Ok(())
}
