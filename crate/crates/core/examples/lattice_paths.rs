//! Marked lattice paths: major index, the map to Frobenius symbols, and peak-count
//! generating functions.

use qpair::paths::{enumerate_paths, gf_closed, gf_recurrence, path_to_symbol, symbol_to_path, LatticePath};
use qpair::series::Truncation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = LatticePath::parse_compact(
        "2: SE SE NE NE SW SE NE NE NE S NE NE SE SE SE NE SE NE NE S SE SE E NE NE SW NE SE NE NE S SE SE; \
         ab a 1 1 b ab 1 b",
    )?;
    println!("path {p}");
    println!("major index {}, peaks {}, s={} t={}", p.major_index(), p.peak_count(), p.s(), p.t());
    let f = path_to_symbol(&p, 5, 3)?;
    println!("symbol {f}, ranks {:?}", f.successive_ranks());
    println!("maps back: {}", symbol_to_path(&f, 5, 3)? == p);

    for q in enumerate_paths(2, 2, 2, false, 24)? {
        println!("  weight-2 (2,2) path: {q}");
    }

    let t = Truncation::new(8);
    let rec = gf_recurrence(3, 2, 2, false, t)?;
    println!("two-peak gf, k=3 i=2: {rec}");
    println!("recurrence = closed sum: {}", rec.agrees_with(&gf_closed(3, 2, 2, false, t)?).is_ok());
    Ok(())
}
