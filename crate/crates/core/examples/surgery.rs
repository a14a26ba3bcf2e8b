use admissible::catalog::{self, parse_lengths};
use admissible::graph::{normalize, subdivide, wedge};
use admissible::invariants::{invariant_set, tau};
use admissible::rational::{format_rational, frac};

// Subdividing an edge and then normalizing leaves every invariant alone,
// while joining two graphs at a point adds their tau constants.
fn main() -> admissible::Result<()> {
    let theta = catalog::build("g2.III", &parse_lengths("a=1,b=2,c=3")?)?;
    let circle = catalog::build("g1.I", &parse_lengths("a=6")?)?;

    let split = subdivide(&theta, "b", &frac(1, 3))?;
    println!("subdivided b: {} vertices, {} edges", split.vertex_count(), split.edge_count());
    assert_eq!(invariant_set(&split)?, invariant_set(&theta)?);
    let back = normalize(&split);
    println!("normalized again: {} vertices, {} edges", back.vertex_count(), back.edge_count());

    let joined = wedge(&theta, &theta.vertices()[0].id, &circle, &circle.vertices()[0].id, "c.")?;
    let (t1, t2, t) = (tau(&theta)?, tau(&circle)?, tau(&joined)?);
    println!(
        "tau: {} + {} = {}",
        format_rational(&t1),
        format_rational(&t2),
        format_rational(&t)
    );
    assert_eq!(t, t1 + t2);
    Ok(())
}
