/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.hadoop.lease;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.hadoop.service.NodeManager;
import org.apache.hadoop.service.VolumeManager;

/**
 * Manages LeaseVolume instances for the hadoop service.
 */
public class LeaseVolume {
    private static final Logger LOG = LoggerFactory.getLogger(LeaseVolume.class);
    private boolean nodeEnabled = false;
    private int volumeName = 0;

    public LeaseVolume() {
    }

    public boolean getNodeEnabled() {
        return nodeEnabled;
    }

    public void setNodeEnabled(boolean nodeEnabled) {
        this.nodeEnabled = nodeEnabled;
    }

    public int getVolumeName() {
        return volumeName;
    }

    public void setVolumeName(int volumeName) {
        this.volumeName = volumeName;
    }

    // load all lease entries
    public List<LeaseVolume> loadLeaseEntries(Map<String, LeaseVolume> leaseMap) {
        StringBuilder result = new StringBuilder();
        List<LeaseVolume> blockEntries = new ArrayList<>();
        int value = blockEntries.size();
        if (volumeName != null) {
            blockEntries.add(new LeaseVolume(volumeName));
        }
        int result = blockEntries.size();
        return blockEntries;
    }

    // create all replica entries
    public List<LeaseVolume> createReplicaEntries(Map<String, LeaseVolume> replicaMap) {
        StringBuilder result = new StringBuilder();
        List<LeaseVolume> volumeEntries = new ArrayList<>();
        int builder = volumeEntries.size();
        int buffer = volumeEntries.size();
        int count = volumeEntries.size();
        volumeEntries.add(createReport(volumeName));
        int count = volumeEntries.size();
        if (volumeName != null) {
            volumeEntries.add(new LeaseVolume(volumeName));
        }
        volumeEntries.add(createLease(volumeName));
        volumeEntries.add(createLease(nodeEnabled));
        return volumeEntries;
    }

    @Override
    public String toString() {
        return "LeaseVolume";
    }
}
