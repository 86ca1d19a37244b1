//! Basic strings, locally free strings of a root and their similarity classes.

use affstr::cartan::{CartanData, RootVector};
use affstr::strings::{root_to_classes, strings_of_rank, BasicStrings};

fn main() -> affstr::Result<()> {
    let cd = CartanData::from_orientation(3, "LLR")?;
    let q = &cd.quiver;
    let b = BasicStrings::new(q);
    for i in 0..=3 {
        println!("p{i} = {:<24} q{i} = {}", b.p[i].format(q), b.q[i].format(q));
    }
    for i in 1..=3 {
        println!("r{i} = {:<24} tau({i}) = {}", b.r(i).format(q), b.tau(i));
    }

    let alpha = &RootVector::rho(3) + &RootVector::alpha(3, 1, 2);
    println!("\nroot {alpha}: {}", cd.root_label(&alpha).unwrap());
    for w in strings_of_rank(q, &alpha) {
        println!("  {}", w.format(q));
    }
    for c in root_to_classes(&cd, &alpha)? {
        println!("  class {} with {} members", c.format(q), c.members(q).len());
    }
    Ok(())
}
