//! Primitive functions for real roots and the isotropic family at `rho`.

use affstr::cartan::CartanData;
use affstr::convolution::{coefficient_rank, stable_band, ConvolutionAlgebra, Symbol, ThetaCache};

fn main() -> affstr::Result<()> {
    let cd = CartanData::from_orientation(3, "RLL")?;
    let alg = ConvolutionAlgebra::new(cd.clone());
    let q = alg.quiver().clone();
    let cache = ThetaCache::default();

    for r in cd.enumerate_positive_roots(1).into_iter().filter(|r| r.real).take(12) {
        let (f, recipe) = alg.theta_real(&cache, &r.coords)?;
        println!("{:<16} {} terms  {recipe}", r.label.to_string(), f.terms().len());
    }

    let n = q.n();
    let mut family: Vec<_> = alg.difference_family(1)?.into_iter().take(n - 1).collect();
    let top = alg.theta_isotropic(&cache, 1, n)?;
    let band = stable_band(&q);
    println!("\nstable band {}", band.format(&q));
    println!("Theta^(n) on M_(b,t,1): {}", top.coeff(&Symbol::band(band, 1)));
    family.push(top);
    println!("rank of the family at rho: {}", coefficient_rank(&family));
    Ok(())
}
