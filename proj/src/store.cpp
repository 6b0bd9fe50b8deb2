#include "dic/store.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "dic/envelope.hpp"
#include "dic/errors.hpp"
#include "dic/kernels.hpp"
#include "dic/rng.hpp"

namespace fs = std::filesystem;

namespace dic {

namespace {

constexpr std::uint8_t kManifestVersion = 1;
constexpr char kMagic[] = {'D', 'I', 'C', 'R'};

void write_file(const fs::path& p, ByteSpan data) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw StoreError("cannot write " + p.string());
}

Bytes read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StoreError("cannot read " + p.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Bytes encode_manifest(const StoredRecord& rec) {
  ByteWriter w;
  w.raw(ByteSpan(reinterpret_cast<const std::uint8_t*>(kMagic), 4)).u8(kManifestVersion);
  w.u8(static_cast<std::uint8_t>(rec.bundle.scheme())).u64(rec.bundle.file.n()).u64(rec.bundle.sigma.size());
  w.blob(rec.bundle.file.name);
  return std::move(w).take();
}

// Bases H(m_i) (mht) or H(W_i) for the authenticator check, and the matching u.
std::pair<std::vector<G1>, G1> auth_bases(const StoredRecord& rec) {
  const auto& b = rec.bundle;
  switch (b.scheme()) {
    case SchemeId::mht: {
      std::vector<Bytes> encoded;
      for (const auto& m : b.file.blocks) {
        const auto e = m.to_bytes();
        encoded.emplace_back(e.begin(), e.end());
      }
      return {kernels::hash_points(kTagBlockHash, encoded), *b.tag.u};
    }
    case SchemeId::blinded:
      return {blinded::block_hashes(b.file.name, b.file.n()), std::get<blinded::PublicKey>(rec.pk).u};
    case SchemeId::gs:
      return {blinded::block_hashes(b.file.name, b.file.n()), std::get<gs::PublicKey>(rec.pk).u};
  }
  throw FormatError("record: unknown scheme");
}

const G2& owner_v(const scheme::PublicKey& pk) {
  return std::visit([](const auto& k) -> const G2& { return k.v; }, pk);
}

const G2& owner_spk(const scheme::PublicKey& pk) {
  return std::visit([](const auto& k) -> const G2& { return k.spk; }, pk);
}

}  // namespace

void validate_record(const StoredRecord& rec) {
  const auto& b = rec.bundle;
  if (scheme::scheme_of(rec.pk) != b.scheme()) throw FormatError("record: key and tag schemes differ");
  if (!b.tag.verify(owner_spk(rec.pk))) throw FormatError("record: tag signature invalid");
  if (b.tag.name != b.file.name) throw FormatError("record: tag names another file");
  const std::uint64_t n = b.file.n();
  if (n == 0 || b.sigma.size() != n) throw FormatError("record: block and authenticator counts differ");
  if (b.scheme() == SchemeId::mht) {
    if (*b.tag.n != n) throw FormatError("record: tag block count differs");
    if (!b.tree || !b.root_sig) throw FormatError("record: MHT tree missing");
  } else if (b.tree || b.root_sig) {
    throw FormatError("record: unexpected MHT data");
  }

  const G2& v = owner_v(rec.pk);
  auto [bases, u] = auth_bases(rec);
  if (b.scheme() == SchemeId::mht) {
    if (!(mht::MerkleTree::build(bases) == *b.tree)) throw FormatError("record: MHT tree does not match blocks");
    const std::array<std::pair<G1, G2>, 2> terms = {
        std::pair{*b.root_sig, G2::generator()},
        std::pair{hash_to_g1(kTagMhtRoot, b.tree->root()).inverse(), v}};
    if (!pairing_product(terms).is_one()) throw FormatError("record: root signature invalid");
  }

  // e(prod sigma_i^{w_i}, g) == e(prod base_i^{w_i} * u^{sum w_i m_i}, v), weights from the record digest.
  ByteWriter seed;
  wire::encode_points(seed, b.sigma);
  wire::encode_blocks(seed, b.file.blocks);
  const auto d = sha256(seed.bytes());
  std::uint64_t s = 0;
  for (int k = 0; k < 8; ++k) s = (s << 8) | d[k];
  Rng rng(s);
  std::vector<Scalar> w;
  w.reserve(n);
  Scalar mu;
  for (std::uint64_t i = 0; i < n; ++i) {
    w.push_back(Scalar::random_nonzero(rng));
    mu += w.back() * b.file.blocks[i];
  }
  const std::array<std::pair<G1, G2>, 2> terms = {
      std::pair{kernels::msm(b.sigma, w), G2::generator()},
      std::pair{(kernels::msm(bases, w) * u.pow(mu)).inverse(), v}};
  if (!pairing_product(terms).is_one()) throw FormatError("record: authenticator check failed");
}

FileStore::FileStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw StoreError("cannot create store " + root_.string() + ": " + ec.message());
}

fs::path FileStore::record_dir(ByteSpan name) const {
  if (name.empty()) throw ArgumentError("store: empty name");
  return root_ / to_hex(name);
}

std::shared_ptr<std::shared_mutex> FileStore::lock_for(const std::string& key) const {
  std::lock_guard g(locks_mu_);
  auto& slot = locks_[key];
  if (!slot) slot = std::make_shared<std::shared_mutex>();
  return slot;
}

void FileStore::put(const StoredRecord& rec) {
  validate_record(rec);
  const auto& b = rec.bundle;
  const auto dir = record_dir(b.file.name);
  const auto lock = lock_for(dir.filename().string());
  std::unique_lock g(*lock);
  if (fs::exists(dir)) throw StoreError("store: duplicate name " + dir.filename().string());

  const auto tmp = root_ / (".tmp-" + dir.filename().string());
  std::error_code ec;
  fs::remove_all(tmp, ec);
  fs::create_directories(tmp);

  write_file(tmp / "manifest.bin", encode_manifest(rec));
  ByteWriter blocks;
  wire::encode_blocks(blocks, b.file.blocks);
  write_file(tmp / "blocks.bin", blocks.bytes());
  write_file(tmp / "tag.bin", b.tag.encode());
  ByteWriter auths;
  wire::encode_points(auths, b.sigma);
  write_file(tmp / "auths.bin", auths.bytes());
  write_file(tmp / "pk.bin", scheme::encode_public_key(rec.pk));
  if (b.scheme() == SchemeId::mht) {
    write_file(tmp / "tree.bin", b.tree->encode());
    write_file(tmp / "root_sig.bin", b.root_sig->to_bytes());
  }
  fs::rename(tmp, dir, ec);
  if (ec) {
    fs::remove_all(tmp);
    throw StoreError("store: cannot commit record: " + ec.message());
  }
}

StoredRecord FileStore::load(ByteSpan name) const {
  const auto dir = record_dir(name);
  const auto lock = lock_for(dir.filename().string());
  std::shared_lock g(*lock);
  if (!fs::is_directory(dir)) throw StoreError("store: no file named " + dir.filename().string());

  StoredRecord rec;
  const auto manifest = read_file(dir / "manifest.bin");
  ByteReader m(manifest);
  const auto magic = m.fixed<4>();
  if (!std::equal(magic.begin(), magic.end(), kMagic)) throw FormatError("manifest: bad magic");
  if (m.u8() != kManifestVersion) throw FormatError("manifest: unsupported version");
  const auto id = scheme_from_byte(m.u8());
  const auto n = m.u64();
  const auto count = m.u64();
  const auto stored_name = m.blob();
  m.expect_end();
  if (!std::equal(stored_name.begin(), stored_name.end(), name.begin(), name.end())) {
    throw FormatError("manifest: name mismatch");
  }

  auto& b = rec.bundle;
  b.file.name.assign(name.begin(), name.end());
  const auto blocks = read_file(dir / "blocks.bin");
  if (blocks.size() % kScalarBytes != 0 || blocks.size() / kScalarBytes != n) throw FormatError("blocks.bin: size does not match manifest");
  ByteReader br(blocks);
  b.file.blocks = wire::decode_blocks(br, n);
  const auto auths = read_file(dir / "auths.bin");
  if (auths.size() % kG1Bytes != 0 || auths.size() / kG1Bytes != count) throw FormatError("auths.bin: size does not match manifest");
  ByteReader ar(auths);
  b.sigma = wire::decode_points(ar, count);
  b.tag = FileTag::decode(read_file(dir / "tag.bin"));
  if (b.tag.scheme != id) throw FormatError("tag.bin: scheme differs from manifest");
  rec.pk = scheme::decode_public_key(read_file(dir / "pk.bin"));
  if (id == SchemeId::mht) {
    b.tree = mht::MerkleTree::decode(read_file(dir / "tree.bin"));
    b.root_sig = G1::from_bytes(read_file(dir / "root_sig.bin"));
  }
  validate_record(rec);
  return rec;
}

bool FileStore::contains(ByteSpan name) const { return fs::is_directory(record_dir(name)); }

void FileStore::remove(ByteSpan name) {
  const auto dir = record_dir(name);
  const auto lock = lock_for(dir.filename().string());
  std::unique_lock g(*lock);
  if (!fs::exists(dir)) throw StoreError("store: no file named " + dir.filename().string());
  fs::remove_all(dir);
}

std::vector<Bytes> FileStore::names() const {
  std::vector<Bytes> out;
  for (const auto& e : fs::directory_iterator(root_)) {
    const auto stem = e.path().filename().string();
    if (!e.is_directory() || stem.starts_with(".")) continue;
    try {
      out.push_back(from_hex(stem));
    } catch (const std::exception&) {
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dic
