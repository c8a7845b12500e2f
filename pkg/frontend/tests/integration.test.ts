/**
 * Integration tests against the real review service: the backend is spawned
 * as a subprocess over a fixture record set and everything goes through its
 * HTTP API, exactly as the browser would.
 */

import { ChildProcess, execFileSync, spawn } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { ReviewApi } from '../src/api.js';
import { ReviewSession } from '../src/session.js';

const FIXTURE_SCRIPT = fileURLToPath(new URL('./fixture/build_fixture.py', import.meta.url));
const PORT = 18442;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(deadlineMs = 20_000): Promise<void> {
  const started = Date.now();
  for (;;) {
    try {
      const res = await fetch(`${BASE}/api/stats`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    if (Date.now() - started > deadlineMs) {
      throw new Error('review service did not come up');
    }
    await new Promise((r) => setTimeout(r, 200));
  }
}

beforeAll(async () => {
  const workdir = mkdtempSync(join(tmpdir(), 'review-fixture-'));
  execFileSync('python3', [FIXTURE_SCRIPT, workdir], { stdio: 'inherit' });
  server = spawn(
    'smellforge',
    ['serve', '-c', join(workdir, 'fixture.yaml'), '--bind', `127.0.0.1:${PORT}`],
    { stdio: 'ignore' },
  );
  await waitForServer();
}, 30_000);

afterAll(() => {
  server?.kill();
});

function answerAll(session: ReviewSession, value = true): void {
  for (const q of session.yesNoQuestions()) session.answer(q.id, value);
}

describe('UI round trip against the live service', () => {
  it('persists a checklist + line selection verbatim into the export', async () => {
    const api = new ReviewApi(BASE);
    const session = new ReviewSession(api, 'roundtrip-reviewer', 'LONG_METHOD');
    await session.loadNext();
    expect(session.state).toBe('reviewing');
    expect(session.sample?.smell).toBe('LONG_METHOD');

    session.answer('LM.Q1', true);
    session.answer('LM.Q2', false);
    session.answer('LM.Q3', true);
    session.setVerdict('POSITIVE');
    session.selectRange(12, 25);
    const sampleId = session.sample!.id;
    const draftAnswers = Object.fromEntries(session.answers);
    expect(session.canSubmit()).toBe(true);

    const result = await session.submit();
    expect(result).toEqual({ accepted: true });

    const exported = await api.exportRecords();
    const record = exported.records.find((r) => (r as { id: string }).id === sampleId) as {
      label: string;
      ground_truth: { kind: string; extract_lines: number[][] };
      provenance: { label_source: string; annotation: { answers: Record<string, boolean> } };
    };
    expect(record).toBeDefined();
    expect(record.label).toBe('POSITIVE');
    expect(record.ground_truth.kind).toBe('EXTRACT_LINES');
    expect(record.ground_truth.extract_lines).toEqual([[12, 25]]);
    expect(record.provenance.label_source).toBe('reviewer:roundtrip-reviewer');
    expect(record.provenance.annotation.answers).toEqual(draftAnswers);
  });

  it('surfaces a server rejection and drops the local label state', async () => {
    const api = new ReviewApi(BASE);
    const session = new ReviewSession(api, 'bounds-reviewer', 'LONG_METHOD');
    await session.loadNext();
    expect(session.state).toBe('reviewing');
    answerAll(session);
    session.setVerdict('POSITIVE');
    // select past the end of the method by writing the range directly, the
    // way a buggy client might; the server is the authority
    session.lineRanges = [[5000, 6000]];
    const result = await session.submit();
    expect(result.accepted).toBe(false);
    if (!result.accepted) expect(result.reason).toMatch(/outside/);
    expect(session.verdict).toBeNull();
    expect(session.lineRanges).toEqual([]);
  });
});

describe('queue exclusivity between concurrent reviewers', () => {
  it('never serves one leased sample to two reviewers', async () => {
    const api = new ReviewApi(BASE);
    const alice = new ReviewSession(api, 'alice');
    const bob = new ReviewSession(api, 'bob');
    const seen: Record<string, string[]> = { alice: [], bob: [] };

    for (let round = 0; round < 4; round++) {
      await Promise.all([alice.loadNext(), bob.loadNext()]);
      if (alice.state !== 'reviewing' && bob.state !== 'reviewing') break;
      if (alice.state === 'reviewing' && bob.state === 'reviewing') {
        expect(alice.sample!.id).not.toBe(bob.sample!.id);
      }
      for (const [who, session] of [
        ['alice', alice],
        ['bob', bob],
      ] as const) {
        if (session.state !== 'reviewing') continue;
        seen[who]!.push(session.sample!.id);
        answerAll(session, false);
        session.setVerdict('NEGATIVE');
        const res = await session.submit();
        expect(res.accepted).toBe(true);
      }
    }
    const overlap = seen.alice!.filter((id) => seen.bob!.includes(id));
    expect(seen.alice!.length + seen.bob!.length).toBeGreaterThan(2);
    expect(overlap).toEqual([]);
  });
});
