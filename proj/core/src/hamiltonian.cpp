// Copyright 2026 The qdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdt/hamiltonian.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "parallel.hpp"

namespace qdt {

namespace {

using nlohmann::json;

// Word with `letters[k]` on site `sites[k]`, identity elsewhere.
PauliString placed(int n_qubits, std::initializer_list<int> sites,
                   const char* letters) {
  std::string w(static_cast<std::size_t>(n_qubits), 'I');
  int k = 0;
  for (int j : sites) w[static_cast<std::size_t>(j)] = letters[k++];
  return PauliString(std::move(w));
}

void push_field(TermList& terms, int n_qubits, double coeff, char axis) {
  if (coeff == 0.0) return;
  const char letters[2] = {axis, '\0'};
  for (int j = 0; j < n_qubits; ++j) {
    terms.push_back({coeff, placed(n_qubits, {j}, letters)});
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::heisenberg:
      return "heisenberg";
    case Family::spt:
      return "spt";
    case Family::ising:
      return "ising";
    case Family::xyz:
      return "xyz";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  for (Family f : kAllFamilies) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown Hamiltonian family '" + name + "'");
}

TermList build_family(const HamiltonianSpec& spec) {
  const int n = spec.n_qubits;
  if (n < 3) {
    throw std::invalid_argument(
        "build_family: need at least 3 sites for the three-site terms");
  }
  const std::size_t want_arity = spec.family == Family::spt ? 2 : 1;
  if (spec.params.size() != want_arity) {
    throw std::invalid_argument(
        std::string("build_family: ") + family_name(spec.family) +
        " takes " + std::to_string(want_arity) + " parameter(s)");
  }

  TermList terms;
  switch (spec.family) {
    case Family::heisenberg: {
      const double h = spec.params[0];
      for (const char* ax : {"XX", "YY", "ZZ"}) {
        for (int j = 0; j + 1 < n; ++j) {
          terms.push_back({-1.0, placed(n, {j, j + 1}, ax)});
        }
      }
      for (char ax : {'X', 'Y', 'Z'}) push_field(terms, n, -h, ax);
      break;
    }
    case Family::spt: {
      const double h1 = spec.params[0];
      const double h2 = spec.params[1];
      for (int j = 0; j + 2 < n; ++j) {
        terms.push_back({-1.0, placed(n, {j, j + 1, j + 2}, "ZXZ")});
      }
      push_field(terms, n, -h1, 'X');
      if (h2 != 0.0) {
        for (int j = 0; j + 1 < n; ++j) {
          terms.push_back({-h2, placed(n, {j, j + 1}, "XX")});
        }
      }
      break;
    }
    case Family::ising: {
      const double h = spec.params[0];
      for (int j = 0; j + 1 < n; ++j) {
        terms.push_back({-1.0, placed(n, {j, j + 1}, "ZZ")});
      }
      push_field(terms, n, -h, 'X');
      break;
    }
    case Family::xyz: {
      const double h = spec.params[0];
      for (int j = 0; j + 2 < n; ++j) {
        terms.push_back({-1.0, placed(n, {j, j + 1, j + 2}, "XYZ")});
      }
      if (h != 0.0) {
        static constexpr char kCycle[3] = {'X', 'Y', 'Z'};
        for (int j = 0; j < n; ++j) {
          const char ax[2] = {kCycle[j % 3], '\0'};
          terms.push_back({-h, placed(n, {j}, ax)});
        }
      }
      break;
    }
  }
  return terms;
}

std::vector<std::vector<double>> parameter_grid(Family family) {
  std::vector<std::vector<double>> grid;
  grid.reserve(100);
  if (family == Family::spt) {
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 20; ++b) {
        grid.push_back({0.06 * a, -0.2 + 0.02 * b});
      }
    }
  } else {
    for (int k = 0; k < 100; ++k) {
      grid.push_back({1.1 + 0.02 * k});
    }
  }
  return grid;
}

std::vector<PauliString> observable_pool(int n_qubits) {
  if (n_qubits < 3) {
    throw std::invalid_argument("observable_pool: n_qubits must be >= 3");
  }
  std::set<PauliString> words;
  for (Family f : kAllFamilies) {
    HamiltonianSpec spec{f, n_qubits,
                         f == Family::spt ? std::vector<double>{1.0, 1.0}
                                          : std::vector<double>{1.0}};
    for (const auto& term : build_family(spec)) {
      words.insert(term.op);
    }
  }
  return {words.begin(), words.end()};
}

GroundStateBank ground_state_bank(Family family, int n_qubits) {
  const auto grid = parameter_grid(family);
  GroundStateBank bank;
  bank.family = family;
  bank.n_qubits = n_qubits;
  bank.entries.reserve(grid.size());
  for (const auto& params : grid) {
    bank.entries.push_back({params, 0.0, Statevector(n_qubits)});
  }
  internal::parallel_for(grid.size(), [&](std::size_t k) {
    const HamiltonianSpec spec{family, n_qubits, grid[k]};
    try {
      GroundState gs = ground_state(build_family(spec), n_qubits);
      bank.entries[k].energy = gs.energy;
      bank.entries[k].state = std::move(gs.state);
    } catch (const SolverError& e) {
      std::ostringstream msg;
      msg << family_name(family) << " params (";
      for (std::size_t p = 0; p < grid[k].size(); ++p) {
        msg << (p ? ", " : "") << grid[k][p];
      }
      msg << "): " << e.what();
      throw SolverError(msg.str(), e.iterations());
    }
  });
  return bank;
}

namespace {

constexpr char kBankMagic[8] = {'Q', 'D', 'T', 'B', 'A', 'N', 'K', '\x01'};

void write_u32_le(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

std::uint32_t read_u32_le(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return v;
}

void write_f64_le(std::ostream& out, double d) {
  const auto u = std::bit_cast<std::uint64_t>(d);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xff);
  out.write(b, 8);
}

double read_f64_le(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= std::uint64_t{b[i]} << (8 * i);
  return std::bit_cast<double>(u);
}

}  // namespace

void save_bank(const GroundStateBank& bank,
               const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw std::runtime_error("save_bank: cannot open " + file.string());
  }
  json header;
  header["schema_version"] = 1;
  header["family"] = family_name(bank.family);
  header["n_qubits"] = bank.n_qubits;
  header["n_states"] = bank.entries.size();
  json params = json::array();
  json energies = json::array();
  for (const auto& e : bank.entries) {
    params.push_back(e.params);
    energies.push_back(e.energy);
  }
  header["params"] = std::move(params);
  header["energies"] = std::move(energies);
  const std::string text = header.dump();

  out.write(kBankMagic, sizeof(kBankMagic));
  write_u32_le(out, static_cast<std::uint32_t>(text.size()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const auto& e : bank.entries) {
    for (const auto& a : e.state.amplitudes()) {
      write_f64_le(out, a.real());
      write_f64_le(out, a.imag());
    }
  }
  if (!out) {
    throw std::runtime_error("save_bank: write failed for " + file.string());
  }
}

GroundStateBank load_bank(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw std::runtime_error("load_bank: cannot open " + file.string());
  }
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kBankMagic, sizeof(magic)) != 0) {
    throw std::runtime_error("load_bank: bad magic in " + file.string());
  }
  const std::uint32_t header_len = read_u32_le(in);
  std::string text(header_len, '\0');
  in.read(text.data(), header_len);
  if (!in) {
    throw std::runtime_error("load_bank: truncated header in " +
                             file.string());
  }
  const json header = json::parse(text);
  if (header.at("schema_version").get<int>() != 1) {
    throw std::runtime_error("load_bank: unsupported schema version");
  }

  GroundStateBank bank;
  bank.family = family_from_name(header.at("family").get<std::string>());
  bank.n_qubits = header.at("n_qubits").get<int>();
  const auto n_states = header.at("n_states").get<std::size_t>();
  const auto& params = header.at("params");
  const auto& energies = header.at("energies");
  if (params.size() != n_states || energies.size() != n_states) {
    throw std::runtime_error("load_bank: header arrays inconsistent");
  }

  const std::size_t dim = std::size_t{1} << bank.n_qubits;
  bank.entries.reserve(n_states);
  for (std::size_t k = 0; k < n_states; ++k) {
    std::vector<std::complex<double>> amps(dim);
    for (auto& a : amps) {
      const double re = read_f64_le(in);
      const double im = read_f64_le(in);
      a = {re, im};
    }
    if (!in) {
      throw std::runtime_error("load_bank: truncated amplitude data in " +
                               file.string());
    }
    bank.entries.push_back({params[k].get<std::vector<double>>(),
                            energies[k].get<double>(),
                            Statevector(bank.n_qubits, std::move(amps))});
  }
  return bank;
}

}  // namespace qdt
