#include <doctest.h>

#include <fstream>
#include <thread>

#include "dic/envelope.hpp"
#include "dic/errors.hpp"
#include "dic/games.hpp"
#include "dic/server.hpp"
#include "dic/store.hpp"
#include "dic/tpa.hpp"
#include "dic/transport.hpp"
#include "temp_dir.hpp"

using namespace dic;
namespace fs = std::filesystem;

namespace {

BlockVector random_file(std::uint64_t n, Rng& rng) { return {games::random_name(rng), games::random_blocks(n, rng)}; }

StoredRecord make_record(SchemeId id, std::uint64_t n, Rng& rng) {
  const auto sk = scheme::keygen(id, rng);
  return {scheme::public_key(sk), scheme::token_gen(sk, random_file(n, rng), rng)};
}

void flip_bit(const fs::path& p, std::size_t bit) {
  std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
  f.seekg(static_cast<std::streamoff>(bit / 8));
  char ch;
  f.get(ch);
  ch = static_cast<char>(ch ^ (1 << (bit % 8)));
  f.seekp(static_cast<std::streamoff>(bit / 8));
  f.put(ch);
}

}  // namespace

TEST_CASE("frame codec") {
  for (std::uint8_t t = 1; t <= 8; ++t) {
    const wire::Envelope env{wire::kVersion, SchemeId::gs, static_cast<wire::MessageType>(t), Bytes{1, 2, 3, t}};
    const auto frame = wire::frame_encode(env);
    REQUIRE(frame.size() == wire::kFrameHeader + wire::kEnvelopeHeader + 4);
    CHECK(frame[0] == 0);
    CHECK(frame[3] == 7);
    CHECK(wire::frame_decode(frame) == env);
    CHECK_THROWS_AS(wire::frame_decode(ByteSpan(frame).first(frame.size() - 1)), DecodeError);
    Bytes longer = frame;
    longer.push_back(0);
    CHECK_THROWS_AS(wire::frame_decode(longer), DecodeError);
  }
  CHECK_THROWS_AS(wire::frame_payload_length(Bytes{0x7f, 0, 0, 0}), DecodeError);
  CHECK_THROWS_AS(wire::Envelope::decode(Bytes{2, 0, 1}), DecodeError);
  CHECK_THROWS_AS(wire::Envelope::decode(Bytes{1, 9, 1}), DecodeError);
  CHECK_THROWS_AS(wire::Envelope::decode(Bytes{1, 0, 0}), DecodeError);
  CHECK_THROWS_AS(wire::Envelope::decode(Bytes{1, 0, 9}), DecodeError);
}

TEST_CASE("message bodies") {
  Rng rng(81);
  for (auto id : scheme::kAllSchemes) {
    const auto rec = make_record(id, 5, rng);
    const wire::UploadBody up{rec.pk, rec.bundle};
    const auto back = wire::UploadBody::decode(id, up.encode());
    CHECK(back.encode() == up.encode());
    const wire::TagBody tb{rec.bundle.tag, 5};
    CHECK(wire::TagBody::decode(tb.encode()).encode() == tb.encode());
  }
  const wire::ChallengeBody cb{Bytes{'f'}, sample_challenge(9, 3, rng)};
  const auto cb2 = wire::ChallengeBody::decode(cb.encode());
  CHECK(cb2.name == cb.name);
  CHECK(cb2.chal == cb.chal);
  const wire::VerdictBody vb{false, VerifyStatus::equation_failed};
  const auto vb2 = wire::VerdictBody::decode(vb.encode());
  CHECK(vb2.accepted == vb.accepted);
  CHECK(vb2.status == vb.status);
}

TEST_CASE("file store") {
  TempDir tmp;
  Rng rng(82);
  std::vector<StoredRecord> recs;
  {
    FileStore store(tmp.path);
    for (auto id : scheme::kAllSchemes) {
      recs.push_back(make_record(id, 7, rng));
      store.put(recs.back());
    }
    CHECK_THROWS_AS(store.put(recs[0]), StoreError);
    CHECK(store.names().size() == 3);
  }
  FileStore reopened(tmp.path);
  for (const auto& r : recs) {
    const auto name = r.bundle.file.name;
    REQUIRE(reopened.contains(name));
    const auto got = reopened.load(name);
    CHECK(got.bundle.file.blocks == r.bundle.file.blocks);
    CHECK(got.bundle.sigma == r.bundle.sigma);
    CHECK(got.bundle.tag.encode() == r.bundle.tag.encode());
    CHECK(scheme::encode_public_key(got.pk) == scheme::encode_public_key(r.pk));
  }
  CHECK_THROWS_AS(reopened.load(Bytes{'n', 'o'}), StoreError);
  reopened.remove(recs[1].bundle.file.name);
  CHECK_FALSE(reopened.contains(recs[1].bundle.file.name));

  auto forged = make_record(SchemeId::blinded, 4, rng);
  forged.bundle.sigma[2] = forged.bundle.sigma[2] * G1::generator();
  CHECK_THROWS_AS(reopened.put(forged), FormatError);
  CHECK_FALSE(reopened.contains(forged.bundle.file.name));
}

TEST_CASE("server errors become envelopes") {
  TempDir tmp;
  CloudServer server(tmp.path, 1);
  const auto r = server.handle(wire::make(SchemeId::mht, wire::MessageType::get_tag, Bytes{'x'}));
  CHECK(r.type == wire::MessageType::error);
  const auto v = server.handle(wire::make(SchemeId::mht, wire::MessageType::verdict, {}));
  CHECK(v.type == wire::MessageType::error);
  const auto bad = wire::frame_decode(server.handle_frame(Bytes{0, 0, 0, 1, 1}));
  CHECK(bad.type == wire::MessageType::error);
}

TEST_CASE("honest audits through the in-process transport") {
  TempDir tmp;
  CloudServer server(tmp.path, 2);
  InProcTransport t(server);
  Rng rng(83);
  for (auto id : scheme::kAllSchemes) {
    const auto sk = scheme::keygen(id, rng);
    const auto pk = scheme::public_key(sk);
    for (int i = 0; i < 50; ++i) {
      const auto n = 1 + rng.below(16);
      const auto file = random_file(n, rng);
      upload_file(t, sk, file, rng);
      const auto rep = tpa_audit(t, pk, file.name, 1 + rng.below(10), rng);
      REQUIRE(rep.verdict == Verdict::valid);
      CHECK(rep.n == n);
      CHECK(rep.c == std::min<std::uint64_t>(n, rep.c));
      if (i == 0) {
        CHECK(tpa_audit(t, pk, file.name, 10, rng).verdict == Verdict::valid);
        CHECK_THROWS_AS(upload_file(t, sk, file, rng), ProtocolError);
        const auto other = scheme::public_key(scheme::keygen(id, rng));
        CHECK(tpa_audit(t, other, file.name, 3, rng).verdict == Verdict::tag_invalid);
      }
    }
  }
  CHECK(tpa_audit(t, scheme::public_key(scheme::keygen(SchemeId::gs, rng)), Bytes{'?'}, 3, rng).verdict ==
        Verdict::tag_invalid);
}

TEST_CASE("corrupted records are detected") {
  TempDir tmp;
  CloudServer server(tmp.path, 3);
  InProcTransport t(server);
  Rng rng(84);
  for (auto id : scheme::kAllSchemes) {
    const auto sk = scheme::keygen(id, rng);
    const auto pk = scheme::public_key(sk);
    for (const char* part : {"blocks.bin", "tag.bin", "auths.bin"}) {
      const auto file = random_file(6, rng);
      upload_file(t, sk, file, rng);
      const auto path = server.store().record_dir(file.name) / part;
      flip_bit(path, rng.below(fs::file_size(path) * 8));
      const auto rep = tpa_audit(t, pk, file.name, 6, rng);
      INFO(part);
      CHECK(rep.verdict != Verdict::valid);
    }
  }
}

TEST_CASE("socket transport") {
  TempDir tmp;
  CloudServer server(tmp.path, 4);
  SocketServer front(server, "127.0.0.1", 0);
  front.start();
  REQUIRE(front.port() != 0);
  Rng rng(85);
  const auto sk = scheme::keygen(SchemeId::gs, rng);
  const auto pk = scheme::public_key(sk);
  std::vector<Bytes> names;
  {
    SocketTransport t("127.0.0.1", front.port());
    for (int i = 0; i < 4; ++i) {
      const auto file = random_file(5, rng);
      upload_file(t, sk, file, rng);
      names.push_back(file.name);
    }
    CHECK(tpa_audit(t, pk, names[0], 5, rng).verdict == Verdict::valid);
  }
  std::vector<int> ok(4, 0);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] {
      SocketTransport t("127.0.0.1", front.port());
      Rng local(100 + i);
      for (int k = 0; k < 3; ++k) ok[i] += tpa_audit(t, pk, names[i], 4, local).verdict == Verdict::valid;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 3);
  front.stop();

  SocketTransport dead("127.0.0.1", front.port());
  CHECK_THROWS_AS(tpa_audit(dead, pk, names[0], 3, rng), TransportError);

  CHECK(Endpoint::parse("inproc").inproc);
  const auto e = Endpoint::parse("localhost:9000");
  CHECK_FALSE(e.inproc);
  CHECK(e.port == 9000);
  CHECK(e.str() == "localhost:9000");
  CHECK_THROWS_AS(Endpoint::parse("localhost"), ArgumentError);
  CHECK_THROWS_AS(Endpoint::parse("h:99999"), ArgumentError);
}
