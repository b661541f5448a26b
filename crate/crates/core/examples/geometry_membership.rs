//! Domains of the pipeline: membership, sampling and their JSON form.
//!
//! cargo run --example geometry_membership

use crwedge::geometry::{Cone, Disc, Geometry, HalfDisc, Interval, Point, Strip, StripSide, Wedge};
use crwedge::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let strip = Strip::new(Interval::unit(), 0.2, StripSide::Upper)?;
    let wedge = Wedge::new([Interval::unit(), Interval::unit()], Cone::upward(0.6)?, 0.3)?;
    let shapes = [
        Geometry::Disc(Disc::new(Complex64::new(0.0, 0.2), 0.15)?),
        Geometry::HalfDisc(HalfDisc::unit_upper()),
        Geometry::Strip(strip),
    ];
    let probes = [Complex64::new(0.05, 0.1), Complex64::new(0.5, 0.3), Complex64::new(-0.2, -0.01)];
    for g in &shapes {
        let hits: Vec<bool> = probes.iter().map(|&z| g.contains(Point::One(z))).collect();
        println!("{:<9} {hits:?}  {}", g.kind(), serde_json::to_string(g)?);
    }

    // a point in the wedge must have its imaginary part inside the cone
    let inside = [Complex64::new(0.2, 0.05), Complex64::new(-0.4, 0.2)];
    let tilted = [Complex64::new(0.2, 0.2), Complex64::new(-0.4, 0.05)];
    println!("wedge: {} {}", wedge.contains(inside), wedge.contains(tilted));
    let samples = wedge.sample_grid(&[3, 3, 3, 3])?;
    println!("{} wedge samples, all inside: {}", samples.len(), samples.iter().all(|&z| wedge.contains(z)));
    Ok(())
}
