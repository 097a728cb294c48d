// Walks through the basic objects: a character polynomial, its values on a
// few symmetric groups, a free module and its stable decomposition.

#include <iostream>

#include "repstab/repstab.hpp"

using namespace repstab;

int main() {
  const auto x1 = CharacterPolynomial::cycle_count(1, 0, 1);
  const auto x2 = CharacterPolynomial::cycle_count(1, 0, 2);

  std::cout << "E[X_2] on S_n:";
  for (int n = 2; n <= 7; ++n) std::cout << ' ' << to_string(expectation(x2, SizeVector{n}));
  std::cout << '\n';

  std::cout << "<X_1, X_1> on S_n:";
  for (int n = 1; n <= 7; ++n) std::cout << ' ' << to_string(inner(x1, x1, SizeVector{n}));
  std::cout << '\n';

  // Q[Hom(2, d)]: ordered pairs of distinct points
  const auto m = VirtualFreeModule::induction(ClassFunction::regular(SizeVector{2}));
  const auto dec = stable_decompose(m);
  std::cout << "Ind_2(regular) from d = " << dec.valid_from.str() << ":\n";
  for (const auto& [lambda, r] : dec.entries)
    std::cout << "  V" << pad(lambda, dec.valid_from).str() << " (lambda = " << lambda.str() << ") x "
              << to_string(r) << '\n';

  const auto t = tensor(VirtualFreeModule::induction(ClassFunction::trivial(SizeVector{1})),
                        VirtualFreeModule::induction(ClassFunction::trivial(SizeVector{1})));
  std::cout << "Ind_1(triv) tensor Ind_1(triv) has " << t.summands().size() << " summands, degrees";
  for (const auto& s : t.summands()) std::cout << ' ' << s.degree().str();
  std::cout << '\n';
}
