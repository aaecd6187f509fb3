// Metrics dashboard: per-category stacked bars and the headline numbers,
// rendered straight from GET /metrics. Percentages show 1 decimal.

import { ApiClient, Report } from './api';
import { clear, el, pct1 } from './dom';

export class Dashboard {
  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  async refresh(): Promise<void> {
    const report = await this.api.metrics();
    this.render(report);
  }

  render(report: Report): void {
    clear(this.root);
    const o = report.overall;
    if (o.pagesTotal === 0) {
      this.root.append(el('p', { class: 'empty-state' }, [
        'No browsing events in this session yet.',
      ]));
      return;
    }
    this.root.append(el('div', { class: 'headline' }, [
      this.stat('pages', String(o.pagesTotal)),
      this.stat('blocked', pct1(o.pctPagesBlocked)),
      this.stat('ads blocked', pct1(o.pctAdsBlocked)),
      this.stat('trackers/page', o.avgTrackers === null ? '-' : o.avgTrackers.toFixed(1)),
      this.stat('distinct trackers', String(o.distinctTrackers)),
    ]));

    const maxPages = Math.max(1, ...Object.values(report.perCategory)
      .map((row) => row.pagesTotal));
    const table = el('table', { id: 'category-bars' });
    for (const [category, row] of Object.entries(report.perCategory)) {
      const width = (row.pagesTotal / maxPages) * 100;
      const blockedShare = row.pagesTotal ? (row.pagesBlocked / row.pagesTotal) * 100 : 0;
      const bar = el('div', { class: 'bar', style: `width:${width.toFixed(1)}%` }, [
        el('div', { class: 'bar-blocked', style: `width:${blockedShare.toFixed(1)}%` }),
      ]);
      table.append(el('tr', { class: 'category-row', 'data-category': category }, [
        el('td', { class: 'cat-name' }, [category]),
        el('td', { class: 'cat-bar' }, [bar]),
        el('td', { class: 'cat-counts' },
           [`${row.pagesBlocked}/${row.pagesTotal} blocked`]),
      ]));
    }
    this.root.append(table);

    if (o.topTrackers.length) {
      const list = el('ol', { id: 'top-trackers' });
      for (const t of o.topTrackers) {
        list.append(el('li', {}, [`${t.domain} - ${t.pages} pages (${pct1(t.pctPages)})`]));
      }
      this.root.append(el('h3', {}, ['Top trackers']), list);
    }
    if (o.topAdDomains.length) {
      const list = el('ol', { id: 'top-ad-domains' });
      for (const a of o.topAdDomains.slice(0, 10)) {
        list.append(el('li', {}, [`${a.domain} - ${a.ads} ads (${pct1(a.pctAds)})`]));
      }
      this.root.append(el('h3', {}, ['Top ad domains']), list);
    }
  }

  private stat(label: string, value: string): HTMLElement {
    return el('div', { class: 'stat' }, [
      el('div', { class: 'stat-value' }, [value]),
      el('div', { class: 'stat-label' }, [label]),
    ]);
  }
}
