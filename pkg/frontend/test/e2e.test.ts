// End-to-end console contract against a LIVE gateway process (acceptance).
//
// Spawns the real Python gateway plus a stub upstream, boots the real
// console code in this DOM, and verifies:
//   1. toggling a category in the UI makes the proxy block a subsequently
//      loaded page of that category within one poll interval;
//   2. per-URL "allow next time" flips the next resolve.
//
// No browser binary is available in this environment, so the DOM is jsdom;
// everything else (HTTP, gateway, proxy decisions) is live.

import { ChildProcess, spawn } from 'node:child_process';
import http from 'node:http';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { afterAll, beforeAll, describe, expect, it, vi } from 'vitest';
import { bootConsole, POLL_INTERVAL_MS } from '../src/main';

const PAGE_HTML = `<!doctype html><html>
<head><title>Sunday sermon archive</title></head>
<body><p>The pastor's sermon wove scripture and gospel into the prayer
service; worship, faith, and theology fill this church bible study.</p>
</body></html>`;

let upstream: http.Server;
let upstreamPort = 0;
let gatewayProc: ChildProcess;
let proxyPort = 0;
let apiPort = 0;

function startUpstream(): Promise<void> {
  upstream = http.createServer((_req, res) => {
    res.writeHead(200, { 'Content-Type': 'text/html' });
    res.end(PAGE_HTML);
  });
  return new Promise((resolve) => {
    upstream.listen(0, '127.0.0.1', () => {
      upstreamPort = (upstream.address() as { port: number }).port;
      resolve();
    });
  });
}

function startGateway(): Promise<void> {
  const stateDir = mkdtempSync(join(tmpdir(), 'trackwall-e2e-'));
  gatewayProc = spawn('python3', [
    '-m', 'trackwall.cli', 'serve',
    '--listen', '127.0.0.1:0',
    '--api-listen', '127.0.0.1:0',
    '--policy', join(stateDir, 'policy.json'),
    '--registry', join(stateDir, 'registry.json'),
  ], { stdio: ['ignore', 'pipe', 'pipe'] });
  return new Promise((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error('gateway did not start')), 20000);
    let buffered = '';
    gatewayProc.stderr!.on('data', (chunk: Buffer) => {
      buffered += chunk.toString();
      const match = buffered.match(
        /proxy http:\/\/127\.0\.0\.1:(\d+) API http:\/\/127\.0\.0\.1:(\d+)/);
      if (match) {
        proxyPort = Number(match[1]);
        apiPort = Number(match[2]);
        clearTimeout(timer);
        resolve();
      }
    });
    gatewayProc.on('exit', (code) => reject(new Error(`gateway exited: ${code}`)));
  });
}

function navigateThroughProxy(pageUrl: string): Promise<number> {
  return new Promise((resolve, reject) => {
    const req = http.request({
      host: '127.0.0.1',
      port: proxyPort,
      path: pageUrl,
      headers: { Accept: 'text/html', 'X-MTC-Navigate': '1' },
    }, (res) => {
      res.resume();
      res.on('end', () => resolve(res.statusCode ?? 0));
    });
    req.on('error', reject);
    req.end();
  });
}

async function currentVerdict(): Promise<string> {
  const resp = await fetch(`http://127.0.0.1:${apiPort}/page/current?client=127.0.0.1`);
  if (!resp.ok) return 'none';
  return (await resp.json()).verdict;
}

describe('console against a live gateway', () => {
  let ui: ReturnType<typeof bootConsole>;

  beforeAll(async () => {
    await startUpstream();
    await startGateway();
    document.body.innerHTML = '<div id="app"></div>';
    ui = bootConsole(document.getElementById('app')!, `http://127.0.0.1:${apiPort}`);
    await vi.waitFor(() => {
      expect(document.querySelectorAll('#pane-categories input')).not.toHaveLength(0);
    }, { timeout: 10000 });
  }, 40000);

  afterAll(() => {
    ui?.stop();
    gatewayProc?.kill();
    upstream?.close();
  });

  it('category toggle in the UI flips the proxy decision within one poll', async () => {
    const pageUrl = `http://127.0.0.1:${upstreamPort}/sermons`;

    expect(await navigateThroughProxy(pageUrl)).toBe(200);
    expect(await currentVerdict()).toBe('allow'); // nothing blocked yet

    // toggle "religion" in the real panel and apply
    const input = document.querySelector<HTMLInputElement>(
      'input[data-category="religion"]')!;
    input.checked = true;
    input.dispatchEvent(new Event('change'));
    await ui.panel.apply();

    // the next page load of that category must be blocked...
    expect(await navigateThroughProxy(pageUrl)).toBe(200); // body still served
    expect(await currentVerdict()).toBe('block');

    // ...and the popup reflects it within one poll interval
    await vi.waitFor(() => {
      expect(document.querySelector('#verdict')?.textContent).toBe('block');
    }, { timeout: POLL_INTERVAL_MS + 1500 });
  }, 30000);

  it('per-URL allow-next-time flips the next resolve', async () => {
    const pageUrl = `http://127.0.0.1:${upstreamPort}/sermons`;
    await ui.popup.setNextVisit('allow');

    expect(await navigateThroughProxy(pageUrl)).toBe(200);
    expect(await currentVerdict()).toBe('allow');
    await vi.waitFor(() => {
      expect(document.querySelector('#verdict')?.textContent).toBe('allow');
    }, { timeout: POLL_INTERVAL_MS + 1500 });

    // and the UI's displayed next-visit state came from the API
    expect(document.querySelector('#next-visit')!.textContent).toContain('allow');
  }, 30000);
});
