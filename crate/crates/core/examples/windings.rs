//! Windings of strings into a band and the push-forward of their thin modules.

use affstr::modules::{morphisms, pushforward, thin, winding_of_band, winding_of_string};
use affstr::quiver::Quiver;
use affstr::strings::{standard_band, Band, StringWord};

fn main() -> affstr::Result<()> {
    let q = Quiver::parse(2, "RL")?;
    let (band, _) = Band::new(&q, standard_band(&q))?;
    let fb = winding_of_band(&q, &band);
    println!("{}: {}", band.format(&q), fb.to_json(&q));
    println!("admissible: {}", fb.is_admissible(&q));

    for word in ["h1", "h2-.h1", "h2.en"] {
        let w = StringWord::parse(&q, word)?;
        let fw = winding_of_string(&q, &w);
        let gs = morphisms(&fw, &fb);
        println!("{word}: {} morphisms into the band", gs.len());
        for g in gs {
            println!("  vertices {:?}", g.vertex_map);
        }
        let m = pushforward(&q, &fw, &thin(fw.host.clone()))?;
        println!("  M_w dims {:?}", m.dims);
    }
    Ok(())
}
