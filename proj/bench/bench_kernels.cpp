// Times the OpenMP kernels against their serial references on generator sets
// that come up when taking powers of small three-variable ideals.
//
//   vnum_bench [k_max]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "vnum/ass_primes.hpp"
#include "vnum/ideal.hpp"
#include "vnum/kernels.hpp"

namespace {

template <class Fn>
double seconds(Fn&& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r)
    fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void row(const std::string& what, std::size_t size, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(28) << what << std::setw(10) << size << std::setw(14)
            << serial << std::setw(14) << parallel << std::setw(10)
            << (parallel > 0 ? serial / parallel : 0.0) << (same ? "same" : "DIFFERENT") << '\n';
}

} // namespace

int main(int argc, char** argv) {
  using namespace vnum;
  const unsigned k_max = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 8;
  std::cout << "threads: " << omp_get_max_threads() << '\n';
  std::cout << std::left << std::setw(28) << "kernel" << std::setw(10) << "input" << std::setw(14)
            << "serial[s]" << std::setw(14) << "parallel[s]" << std::setw(10) << "speedup"
            << "result\n";

  const auto ring = make_ring({"x", "y", "z"});
  const MonomialIdeal I(ring, {Monomial{4, 1, 0}, Monomial{0, 3, 2}, Monomial{2, 0, 3},
                               Monomial{1, 2, 2}, Monomial{3, 3, 0}});
  const auto pw = powers(I, k_max);
  const auto& top = pw.back();

  {
    std::vector<Monomial> cand;
    for (const auto& a : pw[k_max - 2].gens())
      for (const auto& b : I.gens())
        cand.push_back(a * b);
    std::vector<Monomial> par_out, ser_out;
    const double s = seconds([&] { ser_out = kernels::serial::minimize(cand); }, 1);
    const double p = seconds([&] { par_out = kernels::minimize(cand); }, 3);
    row("minimize", cand.size(), s, p, par_out == ser_out);
  }
  {
    std::vector<Monomial> par_out, ser_out;
    const double s =
        seconds([&] { ser_out = kernels::serial::product(pw[k_max - 2].gens(), I.gens()); }, 1);
    const double p = seconds([&] { par_out = kernels::product(pw[k_max - 2].gens(), I.gens()); }, 3);
    row("product I^(k-1) * I", pw[k_max - 2].size() * I.size(), s, p, par_out == ser_out);
  }
  {
    const auto cx = kernels::colon(top.gens(), Monomial::variable(3, 0));
    const auto cy = kernels::colon(top.gens(), Monomial::variable(3, 1));
    std::vector<Monomial> par_out, ser_out;
    const double s = seconds([&] { ser_out = kernels::serial::intersect(cx, cy); }, 1);
    const double p = seconds([&] { par_out = kernels::intersect(cx, cy); }, 3);
    row("intersect (I^k:x),(I^k:y)", cx.size() * cy.size(), s, p, par_out == ser_out);
  }
  {
    PrimeSet out;
    const double p = seconds([&] { out = associated_primes(top); }, 3);
    std::cout << std::left << std::setw(28) << "associated_primes(I^k)" << std::setw(10)
              << top.size() << std::setw(14) << "-" << std::setw(14) << p << '\n';
  }
  return 0;
}
