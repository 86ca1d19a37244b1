//! Cartan data and the positive roots up to `2 rho` for `n = 3`, orientation `LRL`.

use affstr::cartan::{CartanData, RootVector};

fn main() -> affstr::Result<()> {
    let cd = CartanData::from_orientation(3, "LRL")?;
    println!("{}", cd.quiver);
    println!("C = {:?}", cd.c);
    println!("D = {:?}", cd.d);
    println!("Coxeter = {:?}", cd.coxeter);
    println!("defect(rho) = {}", cd.defect(&RootVector::rho(3))?);
    for r in cd.enumerate_positive_roots(2) {
        println!(
            "{:<18} {:<14} defect {:>2}{}{}",
            r.label.to_string(),
            r.coords.to_string(),
            r.defect,
            if r.real { "" } else { "  imaginary" },
            if r.long { "  long" } else { "" }
        );
    }
    Ok(())
}
