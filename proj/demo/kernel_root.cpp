// Lifts the kernel root X(z) for class 1420 and shows the series it feeds.

#include <iostream>

#include "invseq/gentree.hpp"
#include "invseq/series.hpp"

using namespace invseq;

int main(int argc, char** argv) {
  const int order = argc > 1 ? std::atoi(argv[1]) : 12;
  const auto kernel = series::kernels::c1420();
  std::cout << "kernel  " << kernel.to_string() << "\n";

  const auto x = series::kernel_root(kernel, order);
  std::cout << "X(z)   ";
  for (int i = 0; i <= order; ++i) std::cout << " " << x[i];
  std::cout << "\nK(z, X) vanishes mod z^" << order + 1 << ": " << std::boolalpha << kernel.evaluate(x).is_zero()
            << "\n";

  const auto f = series::to_integers(series::expand_closed_form(gentree::ClassId::c1420, order));
  const auto t = gentree::count_class(gentree::ClassId::c1420, order);
  std::cout << "n  closed-form  generating-tree\n";
  for (int n = 0; n <= order; ++n) std::cout << n << "  " << f[n] << "  " << t[n] << "\n";
}
