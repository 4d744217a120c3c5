use coideal::element::{Element, Generator};
use coideal::tensor::*;
use coideal::verma::{fd_quotient, Sign};
use qfield::{qint, Scalar};

fn main() {
    for (lambda, mu) in [((3u32, 1u32), (2u32, 0u32)), ((4, 2), (2, 0)), ((4, 1), (3, 0))] {
        let bp = Bipartition::new(lambda, mu).unwrap();
        let module = fd_quotient(&summand_highest_weight(&bp)).unwrap().unwrap();
        let dim = module.dim;
        let (l1, l2) = (lambda.0 as i64, lambda.1 as i64);
        let (m1, m2) = (mu.0 as i64, mu.1 as i64);
        let (kappa, n, i) = (l1 + m1 - l2 - m2, l1 - m1, l1 - l2);
        let f_m = module.index_of(0, 1);
        let f_mm = module.index_of(0, 2);
        let src = ModuleTensorVector::from_pair(
            dim,
            &[(f_mm, Scalar::one())],
            &x_pm(Sign::Minus, -n - 2),
        );
        let img = module_coideal_act(&module, &Element::gen(Generator::B1), &src);
        // Expect a multiple of F- v tensor some x^- pair; report coefficients.
        eprintln!("bp {bp}: kappa={kappa} n={n} i={i}");
        for (&(idx, j), c) in img.iter() {
            eprintln!("  ({idx},{j}): {c}");
        }
        let _ = f_m;

        // Triple eigenvalue probe on xi+/xi-.
        let cg = clebsch_gordan(&bp).unwrap();
        let triple = Element::gen(Generator::B1)
            .mul(&Element::gen(Generator::B0))
            .mul(&Element::gen(Generator::Bminus1));
        for name in ["xi+", "xi-"] {
            let c = cg.candidates.iter().find(|c| c.name == name).unwrap();
            if c.is_zero {
                continue;
            }
            let img = module_coideal_act(&cg.module, &triple, &c.vector);
            match c.vector.eigenvalue_of(&img) {
                Some(e) => {
                    let shift = if name == "xi+" { -1 } else { 1 };
                    let claim = &qint(kappa + n - 2 * i + shift) + &(&qint(kappa - 2) * &qint(n));
                    eprintln!("  {name}: eigen {e}; claim match = {}", e == claim);
                }
                None => eprintln!("  {name}: not eigen"),
            }
        }
    }
}
