//! Ranks of two small incidence/homology matrix pairs, checked against
//! rank(M) = r - n - 1 + rank(N) with r = rows of M and n = rows of N.

use rcc_surfaces::gf2::{self, BitMatrix};

fn main() -> rcc_surfaces::Result<()> {
    // a 3-component link on the torus and a 2-component link on the Klein bottle
    let pairs = [
        (
            "torus, 3 components",
            BitMatrix::from_table(&[
                [1, 1, 0, 1, 1, 0],
                [1, 1, 0, 0, 0, 1],
                [1, 1, 0, 1, 1, 0],
                [1, 1, 1, 0, 0, 0],
                [0, 0, 1, 1, 1, 0],
                [0, 0, 0, 1, 1, 1],
            ])?,
            BitMatrix::from_table(&[[1, 0], [1, 0], [1, 0]])?,
        ),
        (
            "Klein bottle, 2 components",
            BitMatrix::from_table(&[
                [1, 1, 0, 1, 1, 0],
                [1, 1, 0, 0, 0, 1],
                [1, 0, 1, 1, 1, 0],
                [1, 1, 1, 0, 0, 0],
                [0, 0, 1, 1, 1, 0],
                [0, 1, 1, 1, 1, 1],
            ])?,
            BitMatrix::from_table(&[[1, 0], [0, 0]])?,
        ),
    ];
    for (name, m, n) in pairs {
        let (rm, rn) = (gf2::rank(&m), gf2::rank(&n));
        let rhs = m.rows() as i64 - n.rows() as i64 - 1 + rn as i64;
        println!("{name}: rank M = {rm}, rank N = {rn}, r - n - 1 + rank N = {rhs}");
        assert_eq!(rm as i64, rhs);
    }
    Ok(())
}
