//! Products and brackets of constructible functions.

use affstr::cartan::CartanData;
use affstr::convolution::ConvolutionAlgebra;

fn main() -> affstr::Result<()> {
    let alg = ConvolutionAlgebra::new(CartanData::from_orientation(2, "LR")?);
    let q = alg.quiver().clone();
    let (t0, t1) = (alg.theta(0)?, alg.theta(1)?);

    println!("theta_0 * theta_1 =\n{}", alg.product(&t0, &t1)?.format(&q));
    println!("[theta_0, theta_1] =\n{}", alg.commutator(&t0, &t1)?.format(&q));

    let b = alg.basic();
    let w = b.p[1].clone();
    let r = b.r(1).clone();
    println!("\nw = {}, r = {}", w.format(&q), r.format(&q));
    println!("closed form:\n{}", alg.key_bracket(&w, &r)?.format(&q));
    println!("convolution:\n{}", alg.commutator(&alg.chi(&w)?, &alg.chi(&r)?)?.format(&q));

    for (i, j) in [(0, 1), (1, 0), (1, 2)] {
        println!("Serre ({i},{j}): {}", alg.serre_check(i, j)?);
    }
    Ok(())
}
